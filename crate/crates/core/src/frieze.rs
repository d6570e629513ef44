//! Conway-Coxeter friezes of zigzag type.
//!
//! Positions use half-unit columns: entries of one row sit two columns
//! apart and neighboring rows are staggered by one column. Row 0 and row
//! `m + 1` are the bounding rows of 1s; rows `1..=m` are interior.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lr_words::{word_of, LRWord, Letter};
use crate::rational::Fraction;

/// One period of a frieze. `rows[r]` holds interior row `r + 1`, and its
/// first entry sits `offsets[r]` half-columns right of the window edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Frieze {
    order: usize,
    rows: Vec<Vec<u64>>,
    offsets: Vec<u8>,
}

/// An occurrence of the maximum with its four diagonal neighbors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MaxNeighborhood {
    pub max: u64,
    pub row: usize,
    pub col: i64,
    pub upper_left: u64,
    pub upper_right: u64,
    pub lower_left: u64,
    pub lower_right: u64,
}

impl MaxNeighborhood {
    /// The four neighbors, sorted.
    pub fn around(&self) -> [u64; 4] {
        let mut a = [self.upper_left, self.upper_right, self.lower_left, self.lower_right];
        a.sort_unstable();
        a
    }

    /// Three-line display: neighbors above, the maximum, neighbors below.
    pub fn display(&self) -> String {
        let w = self.max.to_string().len();
        format!(
            "{:>w$} {:w$} {:>w$}\n{:>w$} {:>w$} {:>w$}\n{:>w$} {:w$} {:>w$}",
            self.upper_left, "", self.upper_right, "", self.max, "", self.lower_left, "", self.lower_right
        )
    }
}

impl Frieze {
    /// Builds `Γ(w)`: a zigzag of `len(w) + 1` interior 1s, stepping down-left
    /// for `L` and down-right for `R`, extended by the diamond rule.
    pub fn from_word(word: &LRWord) -> Result<Frieze> {
        Propagator::new(word).run()
    }

    /// Period of each row, `len(w) + 4`.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn offsets(&self) -> &[u8] {
        &self.offsets
    }

    /// Number of interior rows.
    pub fn height(&self) -> usize {
        self.rows.len()
    }

    fn row_offset(&self, row: usize) -> u8 {
        let m = self.height();
        match row {
            0 => 1 - self.offsets[0],
            r if r == m + 1 => 1 - self.offsets[m - 1],
            r => self.offsets[r - 1],
        }
    }

    /// Entry at `row` (0..=m+1) and half-column `col` relative to the window
    /// edge, extended periodically; `None` off the row's lattice.
    pub fn entry(&self, row: usize, col: i64) -> Option<u64> {
        let m = self.height();
        if row > m + 1 {
            return None;
        }
        let rel = col - self.row_offset(row) as i64;
        if rel.rem_euclid(2) != 0 {
            return None;
        }
        if row == 0 || row == m + 1 {
            return Some(1);
        }
        let j = (rel / 2).rem_euclid(self.order as i64) as usize;
        Some(self.rows[row - 1][j])
    }

    /// Half-columns of interior `row` inside the window `[0, 2·order)`.
    fn cols(&self, row: usize) -> impl Iterator<Item = i64> {
        let off = self.row_offset(row) as i64;
        (0..self.order as i64).map(move |j| off + 2 * j)
    }

    /// Checks positivity, the diamond rule, the bounding rows and the
    /// presence of a zigzag of 1s.
    pub fn check(&self) -> Result<()> {
        let m = self.height();
        let fail = |row, col, detail: &str| Error::DiamondRule { row, col, detail: detail.to_string() };
        if self.rows.iter().any(|r| r.len() != self.order) || self.offsets.len() != m {
            return Err(fail(0, 0, "inconsistent shape"));
        }
        for r in 1..=m {
            for x in self.cols(r) {
                let a = self.entry(r, x).unwrap();
                if a == 0 {
                    return Err(fail(r, x, "non-positive entry"));
                }
                let d = self.entry(r, x + 2).unwrap();
                let b = self.entry(r - 1, x + 1).ok_or_else(|| fail(r, x, "misaligned rows"))?;
                let c = self.entry(r + 1, x + 1).ok_or_else(|| fail(r, x, "misaligned rows"))?;
                if a as u128 * d as u128 != b as u128 * c as u128 + 1 {
                    return Err(fail(r, x, "ad - bc != 1"));
                }
            }
        }
        if !self.has_unit_zigzag() {
            return Err(fail(0, 0, "no zigzag of 1s"));
        }
        Ok(())
    }

    fn has_unit_zigzag(&self) -> bool {
        let m = self.height();
        let mut reach: Vec<i64> = self.cols(1).filter(|&x| self.entry(1, x) == Some(1)).collect();
        for r in 2..=m {
            let mut next: Vec<i64> = reach
                .iter()
                .flat_map(|&x| [x - 1, x + 1])
                .filter(|&x| self.entry(r, x) == Some(1))
                .collect();
            next.sort_unstable();
            next.dedup();
            reach = next;
        }
        !reach.is_empty()
    }

    /// Every occurrence of the maximum in one period, in row-major order.
    pub fn max_neighborhoods(&self) -> Vec<MaxNeighborhood> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(1);
        let mut out = Vec::new();
        for r in 1..=self.height() {
            for x in self.cols(r) {
                if self.entry(r, x) == Some(max) {
                    out.push(MaxNeighborhood {
                        max,
                        row: r,
                        col: x,
                        upper_left: self.entry(r - 1, x - 1).unwrap(),
                        upper_right: self.entry(r - 1, x + 1).unwrap(),
                        lower_left: self.entry(r + 1, x - 1).unwrap(),
                        lower_right: self.entry(r + 1, x + 1).unwrap(),
                    });
                }
            }
        }
        out
    }

    /// The first occurrence of the maximum.
    pub fn max_entry_with_neighbors(&self) -> MaxNeighborhood {
        self.max_neighborhoods()[0]
    }
}

/// Extends a seed zigzag right and left by flipping one vertex at a time.
struct Propagator {
    m: usize,
    order: usize,
    seed: Vec<i64>,
    values: HashMap<(usize, i64), u64>,
}

impl Propagator {
    fn new(word: &LRWord) -> Self {
        let k = word.len();
        let m = k + 1;
        let mut seed = Vec::with_capacity(m + 2);
        seed.push(1);
        seed.push(0);
        for letter in word.letters() {
            let last = *seed.last().unwrap();
            seed.push(match letter {
                Letter::L => last - 1,
                Letter::R => last + 1,
            });
        }
        seed.push(seed[m] + 1);
        let mut values = HashMap::new();
        for (r, &x) in seed.iter().enumerate().take(m + 1).skip(1) {
            values.insert((r, x), 1);
        }
        Propagator { m, order: k + 4, seed, values }
    }

    fn value(&self, row: usize, col: i64) -> u64 {
        if row == 0 || row == self.m + 1 {
            return 1;
        }
        self.values[&(row, col)]
    }

    /// `(1 + b·c) / a`, insisting on exact positive division.
    fn solve(&self, a: u64, b: u64, c: u64, row: usize, col: i64) -> Result<u64> {
        let num = 1 + b as u128 * c as u128;
        if a == 0 || num % a as u128 != 0 {
            return Err(Error::DiamondRule {
                row,
                col,
                detail: format!("(1 + {b}*{c}) is not divisible by {a}"),
            });
        }
        u64::try_from(num / a as u128).map_err(|_| Error::Overflow)
    }

    fn sweep_right(&mut self, bound: i64) -> Result<()> {
        let m = self.m;
        let mut z = self.seed.clone();
        loop {
            if z[0] < z[1] {
                z[0] += 2;
                continue;
            }
            if z[m + 1] < z[m] {
                z[m + 1] += 2;
                continue;
            }
            let r = (1..=m).min_by_key(|&r| z[r]).unwrap();
            if z[r] >= bound {
                return Ok(());
            }
            let x = z[r];
            let a = self.value(r, x);
            let b = self.value(r - 1, x + 1);
            let c = self.value(r + 1, x + 1);
            let d = self.solve(a, b, c, r, x + 2)?;
            self.values.insert((r, x + 2), d);
            z[r] = x + 2;
        }
    }

    fn sweep_left(&mut self, bound: i64) -> Result<()> {
        let m = self.m;
        let mut z = self.seed.clone();
        loop {
            if z[0] > z[1] {
                z[0] -= 2;
                continue;
            }
            if z[m + 1] > z[m] {
                z[m + 1] -= 2;
                continue;
            }
            let r = (1..=m).max_by_key(|&r| z[r]).unwrap();
            if z[r] <= bound {
                return Ok(());
            }
            let x = z[r];
            let d = self.value(r, x);
            let b = self.value(r - 1, x - 1);
            let c = self.value(r + 1, x - 1);
            let a = self.solve(d, b, c, r, x - 2)?;
            self.values.insert((r, x - 2), a);
            z[r] = x - 2;
        }
    }

    fn run(mut self) -> Result<Frieze> {
        let n = self.order as i64;
        // window [-n, n) with the first seed 1 at column 0; fill one more
        // period to the right to confirm periodicity
        self.sweep_right(3 * n)?;
        self.sweep_left(-n - 1)?;
        let mut rows = Vec::with_capacity(self.m);
        let mut offsets = Vec::with_capacity(self.m);
        for r in 1..=self.m {
            let parity = (r as i64 + 1).rem_euclid(2);
            let first = if (-n).rem_euclid(2) == parity { -n } else { -n + 1 };
            let row: Vec<u64> = (0..n).map(|j| self.value(r, first + 2 * j)).collect();
            for (j, &v) in row.iter().enumerate() {
                let x = first + 2 * j as i64;
                if self.value(r, x + 2 * n) != v {
                    return Err(Error::DiamondRule {
                        row: r,
                        col: x + n,
                        detail: format!("row is not periodic with period {n}"),
                    });
                }
            }
            rows.push(row);
            offsets.push((first + n) as u8);
        }
        Ok(Frieze { order: self.order, rows, offsets })
    }
}

pub fn frieze_from_word(word: &LRWord) -> Result<Frieze> {
    Frieze::from_word(word)
}

pub fn frieze_of(alpha: Fraction) -> Result<Frieze> {
    Frieze::from_word(&word_of(alpha)?)
}

pub fn max_entry_with_neighbors(f: &Frieze) -> MaxNeighborhood {
    f.max_entry_with_neighbors()
}

/// True iff `f2` is `f1` after a horizontal translation, optionally composed
/// with the up-down reflection, the left-right reflection, or both.
pub fn friezes_equivalent(f1: &Frieze, f2: &Frieze) -> bool {
    if f1.order != f2.order || f1.height() != f2.height() {
        return false;
    }
    let m = f1.height();
    let period = 2 * f1.order as i64;
    for flip_rows in [false, true] {
        for flip_cols in [false, true] {
            for shift in 0..period {
                let same = (1..=m).all(|r| {
                    f1.cols(r).all(|x| {
                        let r2 = if flip_rows { m + 1 - r } else { r };
                        let x2 = if flip_cols { -x } else { x } + shift;
                        f2.entry(r2, x2) == f1.entry(r, x)
                    })
                });
                if same {
                    return true;
                }
            }
        }
    }
    false
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Markdown,
    Json,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RenderOptions {
    /// Highlight the first maximum and its four neighbors.
    pub mark_max: bool,
    /// Use ANSI colors for the highlight instead of brackets.
    pub color: bool,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mark {
    None,
    Max,
    Neighbor,
}

pub fn render_frieze(f: &Frieze, format: RenderFormat, opts: RenderOptions) -> String {
    match format {
        RenderFormat::Json => serde_json::to_string(f).expect("frieze serializes"),
        RenderFormat::Ascii => render_ascii(f, opts),
        RenderFormat::Markdown => render_markdown(f, opts),
    }
}

fn marks(f: &Frieze, opts: RenderOptions) -> impl Fn(usize, i64) -> Mark {
    let spot = opts.mark_max.then(|| f.max_entry_with_neighbors());
    move |r, x| match spot {
        Some(s) if (r, x) == (s.row, s.col) => Mark::Max,
        Some(s) if r.abs_diff(s.row) == 1 && (x - s.col).abs() == 1 => Mark::Neighbor,
        _ => Mark::None,
    }
}

fn render_ascii(f: &Frieze, opts: RenderOptions) -> String {
    let mark = marks(f, opts);
    let digits = f.rows.iter().flatten().max().map_or(1, |v| v.to_string().len());
    let bracketed = opts.mark_max && !opts.color;
    let width = digits + if bracketed { 2 } else { 0 };
    let mut out = String::new();
    for r in 0..=f.height() + 1 {
        let mut line = String::new();
        for x in 0..2 * f.order as i64 {
            if x > 0 {
                line.push(' ');
            }
            let Some(v) = f.entry(r, x) else {
                line.push_str(&" ".repeat(width));
                continue;
            };
            let text = match (mark(r, x), bracketed) {
                (Mark::Max, true) => format!("[{v}]"),
                (Mark::Neighbor, true) => format!("({v})"),
                _ => v.to_string(),
            };
            let pad = " ".repeat(width - text.len());
            let _ = match (mark(r, x), opts.color && opts.mark_max) {
                (Mark::Max, true) => write!(line, "{pad}\x1b[1;31m{text}\x1b[0m"),
                (Mark::Neighbor, true) => write!(line, "{pad}\x1b[33m{text}\x1b[0m"),
                _ => write!(line, "{pad}{text}"),
            };
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn render_markdown(f: &Frieze, opts: RenderOptions) -> String {
    let mark = marks(f, opts);
    let cols = 2 * f.order as i64;
    let mut out = String::new();
    out.push('|');
    for x in 0..cols {
        let _ = write!(out, " {x} |");
    }
    out.push_str("\n|");
    for _ in 0..cols {
        out.push_str("---|");
    }
    out.push('\n');
    for r in 0..=f.height() + 1 {
        out.push('|');
        for x in 0..cols {
            match (f.entry(r, x), mark(r, x)) {
                (None, _) => out.push_str("   |"),
                (Some(v), Mark::None) => {
                    let _ = write!(out, " {v} |");
                }
                (Some(v), _) => {
                    let _ = write!(out, " **{v}** |");
                }
            }
        }
        out.push('\n');
    }
    out
}
