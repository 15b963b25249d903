use serde::Serialize;

use super::classify::{classify, Label};
use crate::ck::Family;
use crate::omega::OmegaVector;

/// One sign vector of the extension table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub signs: String,
    pub omega: OmegaVector,
    pub contractions: usize,
    pub labels: Vec<Label>,
    pub type2: usize,
    pub type3: usize,
}

impl TableRow {
    pub fn dim_h2(&self) -> usize {
        self.type2 + self.type3
    }

    /// `(s1,s2,s3) | labels | d2+d3`.
    pub fn render(&self) -> String {
        let labels = if self.labels.is_empty() {
            "none".to_string()
        } else {
            self.labels
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        format!(
            "{} | {} | {}+{}",
            self.signs, labels, self.type2, self.type3
        )
    }
}

/// The row order of the published N = 3 table, grouped by the number of
/// contractions. `None` for other ranks.
pub fn published_row_order(n: usize) -> Option<Vec<OmegaVector>> {
    const ROWS: [&str; 27] = [
        "+,+,+", "-,+,+", "-,-,+", "+,+,-", "+,-,-", "+,-,+", "-,+,-", "-,-,-", "0,+,+", "+,+,0",
        "0,-,+", "0,+,-", "0,-,-", "+,-,0", "-,+,0", "-,-,0", "+,0,+", "+,0,-", "-,0,+", "-,0,-",
        "0,0,+", "+,0,0", "0,0,-", "-,0,0", "0,+,0", "0,-,0", "0,0,0",
    ];
    (n == 3).then(|| {
        ROWS.iter()
            .map(|s| OmegaVector::parse(s).expect("static sign vector"))
            .collect()
    })
}

/// All `3^N` sign vectors with their non-trivial extensions. Rows follow the
/// published order for `su`, N = 3, otherwise contraction count and then the
/// sign string (`+` < `-` < `0`).
pub fn table(family: Family, n: usize) -> Vec<TableRow> {
    let order = match (family, published_row_order(n)) {
        (Family::Su, Some(rows)) => rows,
        _ => {
            let mut all = OmegaVector::all_signs(n);
            all.sort_by_cached_key(|w| (w.zero_indices().len(), w.sign_string()));
            all
        }
    };
    order
        .into_iter()
        .map(|w| {
            let c = classify(family, &w);
            TableRow {
                signs: w.sign_string(),
                contractions: c.n_zero,
                labels: c.labels(),
                type2: c.type2_count(),
                type3: c.type3_count(),
                omega: w,
            }
        })
        .collect()
}

/// Extension table for `su_ω(4)`.
pub fn table_4_1() -> Vec<TableRow> {
    table(Family::Su, 3)
}

/// One rendered row per line, newline terminated.
pub fn render_table(rows: &[TableRow]) -> String {
    rows.iter().map(|r| r.render() + "\n").collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row<'a>(rows: &'a [TableRow], signs: &str) -> &'a TableRow {
        rows.iter().find(|r| r.signs == signs).unwrap()
    }

    #[test]
    fn published_rows() {
        let rows = table_4_1();
        assert_eq!(rows.len(), 27);
        assert_eq!(row(&rows, "(-,0,-)").render(), "(-,0,-) | α_2 | 1+0");
        assert_eq!(
            row(&rows, "(0,+,0)").render(),
            "(0,+,0) | α_1,α_3,β_13 | 2+1"
        );
        assert_eq!(
            row(&rows, "(0,0,+)").render(),
            "(0,0,+) | α_1,α_2,β_12 | 2+1"
        );
        assert_eq!(
            row(&rows, "(0,0,0)").render(),
            "(0,0,0) | α_1,α_2,α_3,β_12,β_13,β_23 | 3+3"
        );
        assert_eq!(rows[0].render(), "(+,+,+) | none | 0+0");
        assert!(rows
            .windows(2)
            .all(|p| p[0].contractions <= p[1].contractions));
    }

    #[test]
    fn small_ranks() {
        let dims = |n| {
            table(Family::Su, n)
                .iter()
                .map(TableRow::dim_h2)
                .collect::<Vec<_>>()
        };
        assert_eq!(dims(1), vec![0, 0, 1]);
        let mut d2 = dims(2);
        d2.dedup();
        assert_eq!(d2, vec![0, 1, 3]);
        let signs: Vec<String> = table(Family::Su, 1).into_iter().map(|r| r.signs).collect();
        assert_eq!(signs, ["(+)", "(-)", "(0)"]);
    }

    #[test]
    fn u_table_has_gamma() {
        let rows = table(Family::U, 3);
        assert_eq!(rows[0].signs, "(+,+,+)");
        assert_eq!(row(&rows, "(0,+,+)").render(), "(0,+,+) | α_1,γ_1 | 1+1");
    }
}
