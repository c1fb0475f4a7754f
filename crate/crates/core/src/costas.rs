//! Costas property verification and small-size exhaustive enumeration.
//!
//! A candidate is a permutation `f` of `{1..N}` placing one dot in each
//! column `x` at row `f(x)`. It is a Costas array iff for every gap `k` the
//! differences `f(x + k) - f(x)` are pairwise distinct.

use std::fmt;

use thiserror::Error;

use crate::exec::Execution;

/// Largest size accepted by [`enumerate_costas`].
pub const MAX_ENUMERATION_SIZE: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CostasError {
    #[error("not a permutation of 1..={n}: {reason}")]
    NotAPermutation { n: usize, reason: String },
    #[error("enumeration size {0} outside 1..=8")]
    SizeTooLarge(usize),
    #[error("leading {t}x{t} block does not hold exactly {t} dots")]
    BlockNotClosed { t: usize },
    #[error("no dot at the {0} corner")]
    NoCornerDot(Corner),
}

/// A permutation of `{1..N}`, column to row, 1-based values.
///
/// `N = 0` is allowed and denotes the empty array, which degenerate
/// constructions (size `q - 4` over GF(4)) produce.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CostasCandidate {
    perm: Vec<u32>,
}

/// Two columns `x < y` whose gap-`k` differences coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Collision {
    pub k: usize,
    pub x: usize,
    pub y: usize,
}

impl CostasCandidate {
    pub fn new(perm: Vec<u32>) -> Result<Self, CostasError> {
        let n = perm.len();
        let mut seen = vec![false; n + 1];
        for (i, &v) in perm.iter().enumerate() {
            let v = v as usize;
            if v == 0 || v > n {
                return Err(CostasError::NotAPermutation {
                    n,
                    reason: format!("entry {v} at column {} out of range", i + 1),
                });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(CostasError::NotAPermutation {
                    n,
                    reason: format!("row {v} repeated at column {}", i + 1),
                });
            }
        }
        Ok(CostasCandidate { perm })
    }

    /// Caller guarantees `perm` is a permutation of `1..=len`.
    pub(crate) fn from_perm_unchecked(perm: Vec<u32>) -> Self {
        debug_assert!(CostasCandidate::new(perm.clone()).is_ok());
        CostasCandidate { perm }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[u32] {
        &self.perm
    }

    pub fn into_perm(self) -> Vec<u32> {
        self.perm
    }

    /// Row of the dot in column `x` (1-based).
    pub fn row(&self, x: usize) -> u32 {
        self.perm[x - 1]
    }

    pub fn is_costas(&self) -> bool {
        self.first_collision().is_none()
    }

    /// First repeated difference, scanning gaps `k` ascending and, within a
    /// gap, the later column `y` ascending.
    pub fn first_collision(&self) -> Option<Collision> {
        let n = self.n();
        // column holding each difference value, offset by n
        let mut owner = vec![0usize; 2 * n + 1];
        for k in 1..n {
            owner.iter_mut().for_each(|o| *o = 0);
            for x in 1..=n - k {
                let d = self.perm[x + k - 1] as i64 - self.perm[x - 1] as i64;
                let slot = &mut owner[(d + n as i64) as usize];
                if *slot != 0 {
                    return Some(Collision { k, x: *slot, y: x });
                }
                *slot = x;
            }
        }
        None
    }

    pub fn difference_table(&self) -> DifferenceTable {
        let n = self.n();
        let rows = (1..n)
            .map(|k| {
                (0..n - k)
                    .map(|x| self.perm[x + k] as i64 - self.perm[x] as i64)
                    .collect()
            })
            .collect();
        DifferenceTable { rows }
    }

    /// Transpose: the inverse permutation.
    pub fn transpose(&self) -> CostasCandidate {
        let mut inv = vec![0u32; self.n()];
        for (x, &y) in self.perm.iter().enumerate() {
            inv[y as usize - 1] = x as u32 + 1;
        }
        CostasCandidate { perm: inv }
    }

    /// Mirror across the vertical axis (reverse column order).
    pub fn flip_columns(&self) -> CostasCandidate {
        let mut perm = self.perm.clone();
        perm.reverse();
        CostasCandidate { perm }
    }

    /// Mirror across the horizontal axis (reverse row order).
    pub fn flip_rows(&self) -> CostasCandidate {
        let n = self.n() as u32;
        CostasCandidate {
            perm: self.perm.iter().map(|&y| n + 1 - y).collect(),
        }
    }

    /// The eight images under the dihedral group of the square.
    pub fn dihedral_images(&self) -> [CostasCandidate; 8] {
        let r = self.flip_rows();
        let c = self.flip_columns();
        let rc = r.flip_columns();
        let t = self.transpose();
        [
            self.clone(),
            r.clone(),
            c.clone(),
            rc.clone(),
            t.clone(),
            t.flip_rows(),
            t.flip_columns(),
            t.flip_rows().flip_columns(),
        ]
    }

    /// Drops the leading `t` columns and rows, which must contain exactly
    /// `t` dots among themselves: `f'(x) = f(x + t) - t`.
    pub fn remove_leading(&self, t: usize) -> Result<CostasCandidate, CostasError> {
        let t32 = t as u32;
        let closed = t <= self.n()
            && self.perm[..t].iter().all(|&y| y <= t32)
            && self.perm[t..].iter().all(|&y| y > t32);
        if !closed {
            return Err(CostasError::BlockNotClosed { t });
        }
        Ok(CostasCandidate {
            perm: self.perm[t..].iter().map(|&y| y - t32).collect(),
        })
    }

    /// Deletes the dot sitting at the given corner together with its row
    /// and column.
    pub fn remove_corner(&self, corner: Corner) -> Result<CostasCandidate, CostasError> {
        let n = self.n() as u32;
        if n == 0 {
            return Err(CostasError::NoCornerDot(corner));
        }
        let (first_col, first_row) = corner.sides();
        let col = if first_col { 0 } else { self.n() - 1 };
        let row = if first_row { 1 } else { n };
        if self.perm[col] != row {
            return Err(CostasError::NoCornerDot(corner));
        }
        let mut perm = self.perm.clone();
        perm.remove(col);
        if first_row {
            perm.iter_mut().for_each(|y| *y -= 1);
        }
        Ok(CostasCandidate { perm })
    }
}

impl fmt::Display for CostasCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.perm.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Corners of the array, named by (column side, row side).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Corner {
    FirstColumnFirstRow,
    FirstColumnLastRow,
    LastColumnFirstRow,
    LastColumnLastRow,
}

impl Corner {
    fn sides(self) -> (bool, bool) {
        match self {
            Corner::FirstColumnFirstRow => (true, true),
            Corner::FirstColumnLastRow => (true, false),
            Corner::LastColumnFirstRow => (false, true),
            Corner::LastColumnLastRow => (false, false),
        }
    }
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (c, r) = self.sides();
        write!(
            f,
            "{} column / {} row",
            if c { "first" } else { "last" },
            if r { "first" } else { "last" }
        )
    }
}

/// Row `k - 1` holds `f(x + k) - f(x)` for `x = 1..=N-k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceTable {
    rows: Vec<Vec<i64>>,
}

impl DifferenceTable {
    /// Differences for gap `k` (1-based); `None` outside `1..N`.
    pub fn row(&self, k: usize) -> Option<&[i64]> {
        k.checked_sub(1)
            .and_then(|i| self.rows.get(i))
            .map(Vec::as_slice)
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows_distinct(&self) -> bool {
        self.rows.iter().all(|row| {
            let mut sorted = row.clone();
            sorted.sort_unstable();
            sorted.windows(2).all(|w| w[0] != w[1])
        })
    }
}

/// Costas property of an arbitrary permutation (validated first).
pub fn is_costas(perm: &[u32]) -> Result<bool, CostasError> {
    Ok(CostasCandidate::new(perm.to_vec())?.is_costas())
}

/// All Costas permutations of size `n`, lexicographically ordered.
pub fn enumerate_costas(n: usize) -> Result<Vec<CostasCandidate>, CostasError> {
    enumerate_costas_with(n, Execution::default())
}

pub fn enumerate_costas_with(
    n: usize,
    exec: Execution,
) -> Result<Vec<CostasCandidate>, CostasError> {
    if !(1..=MAX_ENUMERATION_SIZE).contains(&n) {
        return Err(CostasError::SizeTooLarge(n));
    }
    // one independent search per first-column row; concatenating in row
    // order keeps the output lexicographic
    let per_root = exec.map_collect(1..=n as u32, |first| {
        let mut search = Backtrack::new(n);
        search.place(first);
        search.run();
        search.found
    });
    Ok(per_root.into_iter().flatten().collect())
}

struct Backtrack {
    n: usize,
    perm: Vec<u32>,
    used_rows: Vec<bool>,
    /// `used_diff[k][d + n]`: difference `d` already taken at gap `k`.
    used_diff: Vec<Vec<bool>>,
    found: Vec<CostasCandidate>,
}

impl Backtrack {
    fn new(n: usize) -> Self {
        Backtrack {
            n,
            perm: Vec::with_capacity(n),
            used_rows: vec![false; n + 1],
            used_diff: vec![vec![false; 2 * n + 1]; n],
            found: Vec::new(),
        }
    }

    /// Gap-`k` difference slots the next column would occupy with row `y`.
    fn fits(&self, y: u32) -> bool {
        let x = self.perm.len();
        (1..=x).all(|k| {
            let d = y as i64 - self.perm[x - k] as i64;
            !self.used_diff[k][(d + self.n as i64) as usize]
        })
    }

    fn set_diffs(&mut self, y: u32, value: bool) {
        let x = self.perm.len();
        for k in 1..=x {
            let d = y as i64 - self.perm[x - k] as i64;
            self.used_diff[k][(d + self.n as i64) as usize] = value;
        }
    }

    fn place(&mut self, y: u32) {
        self.set_diffs(y, true);
        self.used_rows[y as usize] = true;
        self.perm.push(y);
    }

    fn unplace(&mut self) {
        let y = self.perm.pop().expect("nonempty");
        self.used_rows[y as usize] = false;
        self.set_diffs(y, false);
    }

    fn run(&mut self) {
        if self.perm.len() == self.n {
            self.found
                .push(CostasCandidate::from_perm_unchecked(self.perm.clone()));
            return;
        }
        for y in 1..=self.n as u32 {
            if !self.used_rows[y as usize] && self.fits(y) {
                self.place(y);
                self.run();
                self.unplace();
            }
        }
    }
}
