//! Sign map comparing the two upper ratio bounds.
//!
//! With `A(a,b,y) = b^{b+1}/a^{a+1} · (a+y)^{a+y+1}/(b+y)^{b+y+1}` and
//! `B(a,b,y) = ((a+y+1)/(b+y+1))^y`, `F = sign(A − B)` is evaluated as
//! `sign(ln A − ln B)`: at `a, b ≈ 1000` the linear-space quantities are
//! far outside `f64` range.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

/// Relative threshold below which `ln A` and `ln B` count as equal.
pub const SIGN_ZERO_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GridMode {
    Paper,
    Desk,
}

impl GridMode {
    pub fn name(self) -> &'static str {
        match self {
            GridMode::Paper => "paper",
            GridMode::Desk => "desk",
        }
    }
}

/// Axis points and the y values a map set is generated for.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridSpec {
    pub a_points: Vec<f64>,
    pub b_points: Vec<f64>,
    pub y_values: Vec<f64>,
    pub mode: GridMode,
}

/// The sixteen y values of the reference experiment.
pub const DEFAULT_Y: [f64; 16] = [
    0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0, 2.5, 4.0, 5.0, 10.0, 15.0, 20.0,
];

/// Points per axis in desk mode.
pub const DESK_POINTS: usize = 280;

/// `[0.1, 10]` in steps of 0.01, then `(10, 100]` in steps of 0.1, then
/// `(100, 1001]` in steps of 1: 991 + 900 + 901 = 2792 points. Each point
/// is formed from an integer so the axis has no accumulated drift.
pub fn paper_axis() -> Vec<f64> {
    let mut v: Vec<f64> = (10..=1000).map(|i| i as f64 / 100.0).collect();
    v.extend((101..=1000).map(|i| i as f64 / 10.0));
    v.extend((101..=1001).map(|i| i as f64));
    v
}

/// `n` log-spaced points over `[0.1, 1001]` with both ends exact.
pub fn desk_axis(n: usize) -> Vec<f64> {
    let (lo, hi) = (0.1f64, 1001.0f64);
    let (l0, l1) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| match i {
            0 => lo,
            i if i == n - 1 => hi,
            i => (l0 + (l1 - l0) * i as f64 / (n - 1) as f64).exp(),
        })
        .collect()
}

impl GridSpec {
    pub fn paper() -> Self {
        let axis = paper_axis();
        Self {
            a_points: axis.clone(),
            b_points: axis,
            y_values: DEFAULT_Y.to_vec(),
            mode: GridMode::Paper,
        }
    }

    pub fn desk() -> Self {
        Self::desk_with(DESK_POINTS)
    }

    pub fn desk_with(n: usize) -> Self {
        let axis = desk_axis(n);
        Self {
            a_points: axis.clone(),
            b_points: axis,
            y_values: DEFAULT_Y.to_vec(),
            mode: GridMode::Desk,
        }
    }

    pub fn for_mode(mode: GridMode) -> Self {
        match mode {
            GridMode::Paper => Self::paper(),
            GridMode::Desk => Self::desk(),
        }
    }

    pub fn with_y(mut self, y_values: Vec<f64>) -> Self {
        self.y_values = y_values;
        self
    }

    /// Both axes strictly increasing and positive.
    pub fn is_valid(&self) -> bool {
        let ok = |v: &[f64]| !v.is_empty() && v[0] > 0.0 && v.windows(2).all(|w| w[0] < w[1]);
        ok(&self.a_points) && ok(&self.b_points)
    }
}

/// `ln A(a, b, y)`, grouped so that swapping `a` and `b` negates it exactly.
pub fn ln_a(a: f64, b: f64, y: f64) -> f64 {
    let pa = (a + 1.0) * a.ln();
    let pb = (b + 1.0) * b.ln();
    let qa = (a + y + 1.0) * (a + y).ln();
    let qb = (b + y + 1.0) * (b + y).ln();
    (pb - pa) + (qa - qb)
}

/// `ln B(a, b, y)`.
pub fn ln_b(a: f64, b: f64, y: f64) -> f64 {
    y * ((a + y + 1.0).ln() - (b + y + 1.0).ln())
}

fn classify(la: f64, lb: f64) -> i8 {
    let d = la - lb;
    if d.abs() <= SIGN_ZERO_TOL * 1f64.max(la.abs()).max(lb.abs()) {
        0
    } else if d > 0.0 {
        1
    } else {
        -1
    }
}

/// `F(a, b, y) ∈ {−1, 0, +1}`.
pub fn sign_f(a: f64, b: f64, y: f64) -> i8 {
    classify(ln_a(a, b, y), ln_b(a, b, y))
}

/// One cell of a map, kept with its log values for the CSV output.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cell {
    pub ln_a: f64,
    pub ln_b: f64,
    pub f: i8,
}

/// `F` over the grid at one y. Rows run from the largest b down to the
/// smallest so that b increases upward when drawn; columns are a ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct SignMap {
    pub a_points: Vec<f64>,
    pub b_points: Vec<f64>,
    pub y: f64,
    pub mode: GridMode,
    cells: Vec<Cell>,
}

impl SignMap {
    pub fn width(&self) -> usize {
        self.a_points.len()
    }

    pub fn height(&self) -> usize {
        self.b_points.len()
    }

    /// Cell at display row `row` (0 = largest b) and column `col`.
    pub fn cell(&self, row: usize, col: usize) -> Cell {
        self.cells[row * self.width() + col]
    }

    pub fn value(&self, row: usize, col: usize) -> i8 {
        self.cell(row, col).f
    }

    /// b value on display row `row`.
    pub fn b_at(&self, row: usize) -> f64 {
        self.b_points[self.height() - 1 - row]
    }

    /// Display row holding `b_points[j]`.
    pub fn row_of(&self, j: usize) -> usize {
        self.height() - 1 - j
    }

    /// `values[row][col]` as nested rows.
    pub fn values(&self) -> Vec<Vec<i8>> {
        self.cells
            .chunks(self.width())
            .map(|r| r.iter().map(|c| c.f).collect())
            .collect()
    }

    /// `a,b,y,lnA,lnB,F`, one row per cell in display order. Floats use
    /// Rust's shortest round-trip formatting, which is platform independent.
    pub fn to_csv(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.cells.len() * 64);
        out.extend_from_slice(b"a,b,y,lnA,lnB,F\n");
        for row in 0..self.height() {
            let b = self.b_at(row);
            for (col, &a) in self.a_points.iter().enumerate() {
                let c = self.cell(row, col);
                writeln!(out, "{a},{b},{},{},{},{}", self.y, c.ln_a, c.ln_b, c.f)
                    .expect("write to Vec");
            }
        }
        out
    }

    /// Plain PGM (`P2`), maxval 2, pixel `F + 1`: black where A < B, white
    /// where A > B, mid-grey on ties.
    pub fn to_pgm(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.cells.len() * 2 + 64);
        write!(out, "P2\n{} {}\n2\n", self.width(), self.height()).expect("write to Vec");
        for row in self.cells.chunks(self.width()) {
            let line: Vec<&str> = row
                .iter()
                .map(|c| match c.f {
                    -1 => "0",
                    0 => "1",
                    _ => "2",
                })
                .collect();
            out.extend_from_slice(line.join(" ").as_bytes());
            out.push(b'\n');
        }
        out
    }
}

/// Fills the map for one y. Rows are computed in parallel into a
/// pre-sized buffer; each cell is a pure function of its coordinates, so
/// the result does not depend on scheduling or thread count.
pub fn grid_signmap(spec: &GridSpec, y: f64) -> SignMap {
    let w = spec.a_points.len();
    let h = spec.b_points.len();
    let mut cells = vec![
        Cell {
            ln_a: 0.0,
            ln_b: 0.0,
            f: 0
        };
        w * h
    ];
    cells
        .par_chunks_mut(w.max(1))
        .enumerate()
        .for_each(|(row, out)| {
            let b = spec.b_points[h - 1 - row];
            for (cell, &a) in out.iter_mut().zip(&spec.a_points) {
                let (la, lb) = (ln_a(a, b, y), ln_b(a, b, y));
                *cell = Cell {
                    ln_a: la,
                    ln_b: lb,
                    f: classify(la, lb),
                };
            }
        });
    SignMap {
        a_points: spec.a_points.clone(),
        b_points: spec.b_points.clone(),
        y,
        mode: spec.mode,
        cells,
    }
}
