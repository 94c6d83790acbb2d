//! Pretty-printers matching the usual printed conventions.
//!
//! Betti diagrams and facet-equation tables print in the shifted
//! convention: the entry for `(column i, degree j)` sits in column `i`,
//! row `j - i`. Cohomology tables print with row `i` shifted right `i`
//! steps, so the entry for `(row i, twist d)` sits in display column
//! `d + i`. Zeros of a sparse diagram print as `-`; positions outside a
//! window or twist range print as `.`.

use boijsoderberg::{BettiDiagram, CoefficientDiagram, CohomologyTable};
use num_traits::Zero;

fn render_grid(col_labels: &[String], row_labels: &[String], cells: &[Vec<String>]) -> String {
    let label_width = row_labels.iter().map(|l| l.len()).max().unwrap_or(0);
    let mut widths: Vec<usize> = col_labels.iter().map(|l| l.len()).collect();
    for row in cells {
        for (k, cell) in row.iter().enumerate() {
            widths[k] = widths[k].max(cell.len());
        }
    }
    let mut out = String::new();
    out.push_str(&" ".repeat(label_width + 2));
    for (k, label) in col_labels.iter().enumerate() {
        out.push_str(&format!(" {:>width$}", label, width = widths[k]));
    }
    out.push('\n');
    for (r, row) in cells.iter().enumerate() {
        out.push_str(&format!("{:>width$}: ", row_labels[r], width = label_width));
        for (k, cell) in row.iter().enumerate() {
            out.push_str(&format!(" {:>width$}", cell, width = widths[k]));
        }
        out.push('\n');
    }
    out
}

/// Shifted display of a Betti diagram, `-` for zeros.
pub fn format_betti(beta: &BettiDiagram) -> String {
    if beta.is_zero() {
        return String::from("(zero diagram)\n");
    }
    let ncols = beta.ncols();
    let mut rmin = i64::MAX;
    let mut rmax = i64::MIN;
    for (&(i, j), _) in beta.iter() {
        rmin = rmin.min(j - i as i64);
        rmax = rmax.max(j - i as i64);
    }
    let col_labels: Vec<String> = (0..ncols).map(|i| i.to_string()).collect();
    let row_labels: Vec<String> = (rmin..=rmax).map(|r| r.to_string()).collect();
    let cells: Vec<Vec<String>> = (rmin..=rmax)
        .map(|r| {
            (0..ncols)
                .map(|i| {
                    let v = beta.get(i, r + i as i64);
                    if v.is_zero() {
                        "-".to_string()
                    } else {
                        v.to_string()
                    }
                })
                .collect()
        })
        .collect();
    render_grid(&col_labels, &row_labels, &cells)
}

/// Shifted display of a facet-equation table: explicit values (including
/// zeros) inside the window, `.` outside.
pub fn format_coefficients(coeffs: &CoefficientDiagram) -> String {
    let w = coeffs.window();
    let ncols = w.ncols();
    let mut rmin = i64::MAX;
    let mut rmax = i64::MIN;
    for i in 0..ncols {
        rmin = rmin.min(w.lower().get(i) - i as i64);
        rmax = rmax.max(w.upper().get(i) - i as i64);
    }
    let col_labels: Vec<String> = (0..ncols).map(|i| i.to_string()).collect();
    let row_labels: Vec<String> = (rmin..=rmax).map(|r| r.to_string()).collect();
    let cells: Vec<Vec<String>> = (rmin..=rmax)
        .map(|r| {
            (0..ncols)
                .map(|i| {
                    let j = r + i as i64;
                    if w.contains(i, j) {
                        coeffs.get(i, j).to_string()
                    } else {
                        ".".to_string()
                    }
                })
                .collect()
        })
        .collect();
    render_grid(&col_labels, &row_labels, &cells)
}

/// Display of a cohomology table with row `i` shifted right `i` steps;
/// rows print from the top cohomological row down to row zero.
pub fn format_cohomology(table: &CohomologyTable) -> String {
    let (lo, hi) = table.range();
    let nrows = table.nrows();
    let cmin = lo;
    let cmax = hi + nrows as i64 - 1;
    let col_labels: Vec<String> = (cmin..=cmax).map(|c| c.to_string()).collect();
    let row_labels: Vec<String> = (0..nrows).rev().map(|i| i.to_string()).collect();
    let cells: Vec<Vec<String>> = (0..nrows)
        .rev()
        .map(|i| {
            (cmin..=cmax)
                .map(|c| {
                    let d = c - i as i64;
                    if d < lo || d > hi {
                        ".".to_string()
                    } else {
                        let v = table.get(i, d);
                        if v.is_zero() {
                            "-".to_string()
                        } else {
                            v.to_string()
                        }
                    }
                })
                .collect()
        })
        .collect();
    render_grid(&col_labels, &row_labels, &cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use boijsoderberg::{pure_diagram, rat_int, DegreeSequence};

    #[test]
    fn betti_display_shifts_rows() {
        let pi = pure_diagram(&DegreeSequence::new(vec![0, 3, 4, 5]).unwrap());
        let text = format_betti(&pi.to_diagram());
        let lines: Vec<&str> = text.lines().collect();
        // rows 0..=2; generator in row 0, the rest in row 2
        assert!(lines[1].starts_with("0:"));
        assert!(lines[1].contains('1'));
        assert_eq!(lines[2].matches('-').count(), 4);
        let bottom: Vec<&str> = lines[3].split_whitespace().collect();
        assert_eq!(bottom, vec!["2:", "-", "10", "15", "6"]);
    }

    #[test]
    fn cohomology_display_right_shifts() {
        let mut t = CohomologyTable::new(2, -1, 1);
        t.set(0, 1, rat_int(3));
        t.set(1, -1, rat_int(2));
        let text = format_cohomology(&t);
        let lines: Vec<&str> = text.lines().collect();
        // columns -1..=2; row 1 prints first, its twist -1 sits in column 0
        assert_eq!(lines[0].split_whitespace().collect::<Vec<_>>(), vec!["-1", "0", "1", "2"]);
        assert_eq!(
            lines[1].split_whitespace().collect::<Vec<_>>(),
            vec!["1:", ".", "2", "-", "-"]
        );
        assert_eq!(
            lines[2].split_whitespace().collect::<Vec<_>>(),
            vec!["0:", "-", "-", "3", "."]
        );
    }
}
