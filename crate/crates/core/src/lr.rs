//! Littlewood-Richardson coefficients by tableau enumeration, plus the two
//! bijections used in the proofs: the ballot-violation swap on two-letter
//! fillings of column-disjoint shapes, and the bottom-row deletion between
//! consecutive staircase families.
//!
//! Enumeration backtracks in reading-word order (rows top to bottom, each
//! row right to left), which makes the ballot condition an incremental
//! prefix check and prunes early.

use crate::error::Error;
use crate::partitions::{skew, Partition, SkewShape};
use crate::Natural;

/// A filling of a skew shape; row i holds `shape.row_len(i)` entries,
/// left to right in absolute column order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

/// A word over positive-integer letters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Word(pub Vec<usize>);

impl SkewTableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self, Error> {
        if rows.len() != shape.rows()
            || rows.iter().enumerate().any(|(i, r)| r.len() != shape.row_len(i))
        {
            return Err(Error::Parse("row lengths do not match the shape".into()));
        }
        Ok(SkewTableau { shape, rows })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at row `r`, absolute column `c`, if that cell is in the shape.
    pub fn entry_at(&self, r: usize, c: usize) -> Option<usize> {
        if r < self.rows.len() && c >= self.shape.row_start(r) && c < self.shape.row_end(r) {
            Some(self.rows[r][c - self.shape.row_start(r)])
        } else {
            None
        }
    }

    /// Reading word: rows top to bottom, each row right to left.
    pub fn reading_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.shape.cell_count());
        for row in &self.rows {
            letters.extend(row.iter().rev().copied());
        }
        Word(letters)
    }

    /// Weakly increasing along rows and strictly increasing down columns,
    /// the column check using absolute column positions.
    pub fn is_semistandard(&self) -> bool {
        for row in &self.rows {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
        }
        for r in 1..self.rows.len() {
            for c in self.shape.row_start(r)..self.shape.row_end(r) {
                if let (Some(above), Some(here)) = (self.entry_at(r - 1, c), self.entry_at(r, c)) {
                    if above >= here {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Letter multiplicities, index 0 holding the count of 1s.
    pub fn content_counts(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for row in &self.rows {
            for &v in row {
                if v > counts.len() {
                    counts.resize(v, 0);
                }
                counts[v - 1] += 1;
            }
        }
        counts
    }

    /// One line per row, inner cells rendered as ".", entries space-separated.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, row) in self.rows.iter().enumerate() {
            let mut cells: Vec<String> = Vec::new();
            for _ in 0..self.shape.row_start(i) {
                cells.push(".".into());
            }
            for &v in row {
                cells.push(v.to_string());
            }
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Ballot (lattice/Yamanouchi) condition: in every prefix, each letter
/// occurs at least as often as the next larger letter.
pub fn is_ballot(w: &Word) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &v in &w.0 {
        if v > counts.len() {
            counts.resize(v, 0);
        }
        counts[v - 1] += 1;
        if v > 1 && counts[v - 1] > counts[v - 2] {
            return false;
        }
    }
    true
}

/// All semistandard fillings of `shape` with content `content` whose reading
/// word is ballot, sorted lexicographically by row-major entry sequence.
pub fn enumerate_lr_tableaux(shape: &SkewShape, content: &Partition) -> Vec<SkewTableau> {
    if shape.cell_count() != content.size() {
        return Vec::new();
    }
    // Cells in reading order.
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for r in 0..shape.rows() {
        for j in (0..shape.row_len(r)).rev() {
            cells.push((r, j));
        }
    }
    let letters = content.len();
    let mut remaining: Vec<usize> = content.parts().to_vec();
    let mut counts = vec![0usize; letters];
    let mut rows: Vec<Vec<usize>> = (0..shape.rows())
        .map(|r| vec![0; shape.row_len(r)])
        .collect();
    let mut out = Vec::new();

    fn rec(
        shape: &SkewShape,
        cells: &[(usize, usize)],
        pos: usize,
        rows: &mut Vec<Vec<usize>>,
        remaining: &mut Vec<usize>,
        counts: &mut Vec<usize>,
        out: &mut Vec<SkewTableau>,
    ) {
        if pos == cells.len() {
            out.push(SkewTableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        let (r, j) = cells[pos];
        let width = shape.row_len(r);
        let col = shape.row_start(r) + j;
        for v in 1..=remaining.len() {
            if remaining[v - 1] == 0 {
                continue;
            }
            // ballot prefix
            if v > 1 && counts[v - 1] + 1 > counts[v - 2] {
                continue;
            }
            // weakly increasing along the row (right neighbor already set)
            if j + 1 < width && v > rows[r][j + 1] {
                continue;
            }
            // strictly increasing down the column (cell above already set)
            if r > 0 && col >= shape.row_start(r - 1) && col < shape.row_end(r - 1) {
                let above = rows[r - 1][col - shape.row_start(r - 1)];
                if v <= above {
                    continue;
                }
            }
            rows[r][j] = v;
            remaining[v - 1] -= 1;
            counts[v - 1] += 1;
            rec(shape, cells, pos + 1, rows, remaining, counts, out);
            counts[v - 1] -= 1;
            remaining[v - 1] += 1;
            rows[r][j] = 0;
        }
    }

    rec(
        shape,
        &cells,
        0,
        &mut rows,
        &mut remaining,
        &mut counts,
        &mut out,
    );
    out.sort_by(|a, b| a.rows.cmp(&b.rows));
    out
}

/// The Littlewood-Richardson coefficient c^outer_{inner, content}: the
/// number of ballot semistandard tableaux of shape outer/inner and the
/// given content. Zero on containment failure or size mismatch.
pub fn lr_coefficient(outer: &Partition, inner: &Partition, content: &Partition) -> Natural {
    match skew(outer.clone(), inner.clone()) {
        Ok(shape) => Natural::from(enumerate_lr_tableaux(&shape, content).len()),
        Err(_) => Natural::zero(),
    }
}

use num_traits::Zero;

/// All row-weakly-increasing {1,2}-fillings of `shape` with exactly `ones`
/// 1s (remaining cells 2s), in deterministic order. A row is determined by
/// its number of 1s, so this walks compositions of `ones` over the rows.
pub fn enumerate_two_letter_fillings(shape: &SkewShape, ones: usize) -> Vec<SkewTableau> {
    let widths: Vec<usize> = (0..shape.rows()).map(|r| shape.row_len(r)).collect();
    let mut choice = vec![0usize; widths.len()];
    let mut out = Vec::new();
    fn rec(
        shape: &SkewShape,
        widths: &[usize],
        row: usize,
        left: usize,
        choice: &mut Vec<usize>,
        out: &mut Vec<SkewTableau>,
    ) {
        if row == widths.len() {
            if left == 0 {
                let rows = widths
                    .iter()
                    .zip(choice.iter())
                    .map(|(&w, &k)| {
                        let mut r = vec![1; k];
                        r.extend(std::iter::repeat_n(2, w - k));
                        r
                    })
                    .collect();
                out.push(SkewTableau {
                    shape: shape.clone(),
                    rows,
                });
            }
            return;
        }
        let w = widths[row];
        for k in 0..=w.min(left) {
            choice[row] = k;
            rec(shape, widths, row + 1, left - k, choice, out);
        }
    }
    rec(shape, &widths, 0, ones, &mut choice, &mut out);
    out
}

fn check_two_letter_disjoint(t: &SkewTableau) -> Result<(), Error> {
    if !t.shape.is_column_disjoint() {
        return Err(Error::SwapPrecondition(
            "shape is not column-disjoint".into(),
        ));
    }
    for row in &t.rows {
        if row.iter().any(|&v| v != 1 && v != 2) {
            return Err(Error::SwapPrecondition("letters must be 1 or 2".into()));
        }
        if row.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::SwapPrecondition(
                "rows must be weakly increasing".into(),
            ));
        }
    }
    Ok(())
}

/// Positions of the cells in reading order: (row, index-within-row).
fn reading_cells(shape: &SkewShape) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for r in 0..shape.rows() {
        for j in (0..shape.row_len(r)).rev() {
            cells.push((r, j));
        }
    }
    cells
}

fn rebuild_sorted(shape: &SkewShape, cells: &[(usize, usize)], letters: &[usize]) -> SkewTableau {
    let mut rows: Vec<Vec<usize>> = (0..shape.rows())
        .map(|r| vec![0; shape.row_len(r)])
        .collect();
    for (&(r, j), &v) in cells.iter().zip(letters) {
        rows[r][j] = v;
    }
    for row in &mut rows {
        row.sort_unstable();
    }
    SkewTableau {
        shape: shape.clone(),
        rows,
    }
}

/// Ballot-violation swap: on a two-letter filling whose reading word fails
/// the ballot condition, find the first reading position where the 2s
/// outnumber the 1s, exchange 1s and 2s in the prefix up to and including
/// that position, and re-sort each affected row weakly increasing. The
/// result has one more 1 than the input.
pub fn ballot_swap_forward(t: &SkewTableau) -> Result<SkewTableau, Error> {
    check_two_letter_disjoint(t)?;
    let mut letters = t.reading_word().0;
    let mut ones = 0usize;
    let mut twos = 0usize;
    let mut first_violation = None;
    for (i, &v) in letters.iter().enumerate() {
        if v == 1 {
            ones += 1;
        } else {
            twos += 1;
        }
        if twos > ones {
            first_violation = Some(i);
            break;
        }
    }
    let k = first_violation.ok_or(Error::NotAViolation)?;
    for letter in &mut letters[..=k] {
        *letter = 3 - *letter;
    }
    Ok(rebuild_sorted(&t.shape, &reading_cells(&t.shape), &letters))
}

/// Inverse of [`ballot_swap_forward`]: reads rows top to bottom but each row
/// left to right (1s before 2s), stops at the first position where the 1s
/// outnumber the 2s, and exchanges letters in that prefix. Requires a
/// two-letter filling with strictly more 1s than 2s, so the stopping
/// position exists; on the balanced-content families the surplus is 2.
pub fn ballot_swap_inverse(t: &SkewTableau) -> Result<SkewTableau, Error> {
    check_two_letter_disjoint(t)?;
    let counts = t.content_counts();
    let ones_total = counts.first().copied().unwrap_or(0);
    let twos_total = counts.get(1).copied().unwrap_or(0);
    if ones_total <= twos_total {
        return Err(Error::SwapPrecondition(format!(
            "need more 1s than 2s, got {ones_total} and {twos_total}"
        )));
    }
    // Modified reading order: rows top to bottom, left to right.
    let mut cells = Vec::new();
    for r in 0..t.shape.rows() {
        for j in 0..t.shape.row_len(r) {
            cells.push((r, j));
        }
    }
    let mut letters: Vec<usize> = cells.iter().map(|&(r, j)| t.rows[r][j]).collect();
    let mut ones = 0usize;
    let mut twos = 0usize;
    let mut stop = None;
    for (i, &v) in letters.iter().enumerate() {
        if v == 1 {
            ones += 1;
        } else {
            twos += 1;
        }
        if ones > twos {
            stop = Some(i);
            break;
        }
    }
    let j = stop.expect("a filling with more 1s than 2s has such a prefix");
    for letter in &mut letters[..=j] {
        *letter = 3 - *letter;
    }
    Ok(rebuild_sorted(&t.shape, &cells, &letters))
}

/// Bottom-row deletion: for a tableau whose bottom row is a full row of 2s
/// starting at column 0, removes that row and the columns it occupies,
/// shifting the remaining rows left. On the stretched staircase families
/// this carries LR tableaux of t·λ_{2m+2}/t·λ_{2m+1} with content
/// t·(m+1, m+1) to LR tableaux of t·λ_{2m+1}/t·λ_{2m} with content
/// t·(m+1, m).
pub fn bottom_row_delete(t: &SkewTableau) -> Result<SkewTableau, Error> {
    let rows = t.shape.rows();
    if rows == 0 {
        return Err(Error::BottomRowNotTwos);
    }
    let last = rows - 1;
    if t.shape.row_len(last) == 0 || t.rows[last].iter().any(|&v| v != 2) {
        return Err(Error::BottomRowNotTwos);
    }
    if t.shape.row_start(last) != 0 {
        return Err(Error::SwapPrecondition(
            "bottom row must start at column 0".into(),
        ));
    }
    let w = t.shape.row_len(last);
    let mut outer = Vec::with_capacity(last);
    let mut inner = Vec::with_capacity(last);
    for i in 0..last {
        if t.shape.row_start(i) < w {
            return Err(Error::SwapPrecondition(
                "a remaining row overlaps the deleted columns".into(),
            ));
        }
        outer.push(t.shape.row_end(i) - w);
        inner.push(t.shape.row_start(i) - w);
    }
    let shape = skew(Partition::new(outer)?, Partition::new(inner)?)?;
    SkewTableau::new(shape, t.rows[..last].to_vec())
}
