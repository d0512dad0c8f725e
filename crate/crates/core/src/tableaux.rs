//! Red/blue fillings of the `(r+1) x (d-r)` grid.
//!
//! A filling places `rg` red integers (each of `1..=g` exactly `r` times)
//! and blue integers from `0..=r` such that
//!
//! * red cells sit above and to the left of blue cells (so the red region
//!   is a Young diagram),
//! * red entries strictly increase along rows and weakly increase down
//!   columns,
//! * blue entries weakly increase along rows and strictly increase down
//!   columns.
//!
//! Counting these fillings needs no Schubert calculus at all, which makes
//! them an independent check on the integrals in [`crate::tevelev`].
//! Red values fit in the first `g` columns; every column further right is
//! forced to read `0, 1, …, r` top to bottom, so the search only walks the
//! leftmost `min(d - r, g)` columns.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::error::Error;
use crate::schubert::{BoxShape, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cell {
    Red(u32),
    Blue(u32),
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Red(v) => write!(f, "R{v}"),
            Cell::Blue(v) => write!(f, "B{v}"),
        }
    }
}

/// Grid dimensions for `(g, r, d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FillingGrid {
    pub g: u32,
    pub r: u32,
    pub rows: u32,
    pub cols: u32,
}

impl FillingGrid {
    pub fn new(g: u32, r: u32, d: u32) -> Result<Self, Error> {
        if r == 0 || d <= r {
            return Err(Error::InvalidParameter(alloc::format!(
                "need r >= 1 and d >= r + 1, got r = {r}, d = {d}"
            )));
        }
        let (rows, cols) = (r + 1, d - r);
        let red = u64::from(r) * u64::from(g);
        if red > u64::from(rows) * u64::from(cols) {
            return Err(Error::GridTooSmall { red: r * g, rows, cols });
        }
        Ok(FillingGrid { g, r, rows, cols })
    }

    /// Columns that may hold red entries.
    pub fn width(&self) -> u32 {
        self.cols.min(self.g)
    }

    fn shape(&self) -> BoxShape {
        BoxShape { rows: self.rows, cols: self.width() }
    }
}

/// A complete filling, stored row-major over the full grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauFilling {
    pub rows: u32,
    pub cols: u32,
    pub cells: Vec<Cell>,
}

impl TableauFilling {
    pub fn get(&self, row: u32, col: u32) -> Cell {
        self.cells[(row * self.cols + col) as usize]
    }

    /// Shape of the red region.
    pub fn red_shape(&self) -> Partition {
        let parts: Vec<u32> = (0..self.rows)
            .map(|i| (0..self.cols).take_while(|&j| matches!(self.get(i, j), Cell::Red(_))).count() as u32)
            .collect();
        Partition::from_unsorted(parts)
    }

    /// Checks every filling rule directly on the full grid.
    pub fn validate(&self, g: u32, r: u32) -> Result<(), String> {
        if self.rows != r + 1 || self.cells.len() != (self.rows * self.cols) as usize {
            return Err("grid has the wrong dimensions".into());
        }
        let mut seen = vec![0u32; g as usize + 1];
        for i in 0..self.rows {
            for j in 0..self.cols {
                match self.get(i, j) {
                    Cell::Red(v) => {
                        if v == 0 || v > g {
                            return Err(alloc::format!("red value {v} out of 1..={g}"));
                        }
                        seen[v as usize] += 1;
                        if i > 0 && matches!(self.get(i - 1, j), Cell::Blue(_)) {
                            return Err(alloc::format!("red below blue at ({i},{j})"));
                        }
                        if j > 0 && matches!(self.get(i, j - 1), Cell::Blue(_)) {
                            return Err(alloc::format!("red right of blue at ({i},{j})"));
                        }
                    }
                    Cell::Blue(v) => {
                        if v > r {
                            return Err(alloc::format!("blue value {v} out of 0..={r}"));
                        }
                    }
                }
                if j + 1 < self.cols {
                    match (self.get(i, j), self.get(i, j + 1)) {
                        (Cell::Red(a), Cell::Red(b)) if a >= b => {
                            return Err(alloc::format!("red not strictly increasing in row {i}"))
                        }
                        (Cell::Blue(a), Cell::Blue(b)) if a > b => {
                            return Err(alloc::format!("blue not weakly increasing in row {i}"))
                        }
                        _ => {}
                    }
                }
                if i + 1 < self.rows {
                    match (self.get(i, j), self.get(i + 1, j)) {
                        (Cell::Red(a), Cell::Red(b)) if a > b => {
                            return Err(alloc::format!("red not weakly increasing in column {j}"))
                        }
                        (Cell::Blue(a), Cell::Blue(b)) if a >= b => {
                            return Err(alloc::format!("blue not strictly increasing in column {j}"))
                        }
                        _ => {}
                    }
                }
            }
        }
        if let Some(v) = (1..=g).find(|&v| seen[v as usize] != r) {
            return Err(alloc::format!("red value {v} appears {} times, expected {r}", seen[v as usize]));
        }
        Ok(())
    }
}

/// One grid row per line, cells separated by spaces.
impl fmt::Display for TableauFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

/// Column-major depth-first search over the leftmost `width` columns.
struct Dfs<'a, F> {
    grid: FillingGrid,
    width: u32,
    cells: Vec<Option<Cell>>,
    remaining: Vec<u32>,
    red_left: u32,
    /// When set, red cells are exactly the cells of this shape.
    red_shape: Option<&'a Partition>,
    visit: F,
    stop: bool,
}

impl<F: FnMut(&[Option<Cell>]) -> bool> Dfs<'_, F> {
    fn at(&self, i: u32, j: u32) -> Option<Cell> {
        self.cells[(j * self.grid.rows + i) as usize]
    }

    fn step(&mut self, idx: u32) {
        if self.stop {
            return;
        }
        let rows = self.grid.rows;
        if idx == rows * self.width {
            if self.red_left == 0 && !(self.visit)(&self.cells) {
                self.stop = true;
            }
            return;
        }
        let (j, i) = (idx / rows, idx % rows);
        // Red cells still owed must fit in what is left of the search.
        let left_in_col = rows - i;
        let capacity = left_in_col + rows * (self.width - j - 1);
        if self.red_left > capacity {
            return;
        }

        let above = if i > 0 { self.at(i - 1, j) } else { None };
        let left = if j > 0 { self.at(i, j - 1) } else { None };
        let red_ok = (i == 0 || matches!(above, Some(Cell::Red(_))))
            && (j == 0 || matches!(left, Some(Cell::Red(_))));
        let (force_red, allow_red) = match self.red_shape {
            Some(mu) => {
                let inside = j < mu.part(i as usize);
                (inside, inside)
            }
            None => (false, red_ok && self.red_left > 0),
        };

        if allow_red {
            let lo = match (above, left) {
                (Some(Cell::Red(a)), Some(Cell::Red(l))) => a.max(l + 1),
                (Some(Cell::Red(a)), _) => a,
                (_, Some(Cell::Red(l))) => l + 1,
                _ => 1,
            };
            for v in lo.max(1)..=self.grid.g {
                if self.remaining[v as usize] == 0 {
                    continue;
                }
                self.remaining[v as usize] -= 1;
                self.red_left -= 1;
                self.cells[idx as usize] = Some(Cell::Red(v));
                self.step(idx + 1);
                self.cells[idx as usize] = None;
                self.red_left += 1;
                self.remaining[v as usize] += 1;
                if self.stop {
                    return;
                }
            }
        }
        if force_red {
            return;
        }

        // A blue entry in row i sits above rows - 1 - i strictly larger
        // blues, all at most r, so it is at most i.
        let hi = i;
        let mut lo = match left {
            Some(Cell::Blue(l)) => l,
            _ => 0,
        };
        if let Some(Cell::Blue(a)) = above {
            lo = lo.max(a + 1);
        }
        for v in lo..=hi {
            self.cells[idx as usize] = Some(Cell::Blue(v));
            self.step(idx + 1);
            self.cells[idx as usize] = None;
            if self.stop {
                return;
            }
        }
    }
}

fn search<F>(grid: FillingGrid, red_shape: Option<&Partition>, visit: F)
where
    F: FnMut(&[Option<Cell>]) -> bool,
{
    let width = grid.width();
    let mut dfs = Dfs {
        grid,
        width,
        cells: vec![None; (grid.rows * width) as usize],
        remaining: {
            let mut v = vec![grid.r; grid.g as usize + 1];
            v[0] = 0;
            v
        },
        red_left: grid.r * grid.g,
        red_shape,
        visit,
        stop: false,
    };
    dfs.step(0);
}

fn expand(grid: FillingGrid, column_major: &[Option<Cell>]) -> TableauFilling {
    let width = grid.width();
    let mut cells = Vec::with_capacity((grid.rows * grid.cols) as usize);
    for i in 0..grid.rows {
        for j in 0..grid.cols {
            let c = if j < width {
                column_major[(j * grid.rows + i) as usize].expect("complete filling")
            } else {
                Cell::Blue(i)
            };
            cells.push(c);
        }
    }
    TableauFilling { rows: grid.rows, cols: grid.cols, cells }
}

/// Number of fillings of the `(r+1) x (d-r)` grid.
pub fn count_fillings(g: u32, r: u32, d: u32) -> Result<BigInt, Error> {
    let grid = FillingGrid::new(g, r, d)?;
    let mut count: u64 = 0;
    search(grid, None, |_| {
        count += 1;
        true
    });
    Ok(BigInt::from(count))
}

/// Up to `limit` fillings in lexicographic order of their column-major
/// cell sequences, with `R1 < … < Rg < B0 < … < Br`.
pub fn list_fillings(g: u32, r: u32, d: u32, limit: usize) -> Result<Vec<TableauFilling>, Error> {
    let grid = FillingGrid::new(g, r, d)?;
    let mut out = Vec::new();
    if limit == 0 {
        return Ok(out);
    }
    search(grid, None, |cells| {
        out.push(expand(grid, cells));
        out.len() < limit
    });
    Ok(out)
}

/// Red and blue sub-filling counts for one red shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeCounts {
    pub red: BigInt,
    pub blue: BigInt,
}

/// Splits the fillings by the shape of their red region. For each shape
/// `μ` with at least one filling, counts the red fillings of `μ` and the
/// blue fillings of the rest of the grid separately; the total number of
/// fillings is `Σ red · blue`.
pub fn count_by_red_shape(g: u32, r: u32, d: u32) -> Result<BTreeMap<Partition, ShapeCounts>, Error> {
    let grid = FillingGrid::new(g, r, d)?;
    let mut out = BTreeMap::new();
    for mu in grid.shape().partitions_of(r * g) {
        let red = count_red(grid, &mu);
        if red == 0 {
            continue;
        }
        let blue = count_blue(grid, &mu);
        if blue == 0 {
            continue;
        }
        out.insert(mu, ShapeCounts { red: BigInt::from(red), blue: BigInt::from(blue) });
    }
    Ok(out)
}

/// Red fillings of exactly the shape `mu`, ignoring the blue part.
fn count_red(grid: FillingGrid, mu: &Partition) -> u64 {
    struct Red {
        g: u32,
        rows: u32,
        /// Column-major cells of `mu`.
        cells: Vec<(u32, u32)>,
        /// Column-major values, indexed like the full `rows x width` grid.
        vals: Vec<u32>,
        remaining: Vec<u32>,
    }

    impl Red {
        fn go(&mut self, idx: usize) -> u64 {
            let Some(&(i, j)) = self.cells.get(idx) else { return 1 };
            let at = |ii: u32, jj: u32| self.vals[(jj * self.rows + ii) as usize];
            let mut lo = 1;
            if i > 0 {
                lo = lo.max(at(i - 1, j));
            }
            if j > 0 {
                lo = lo.max(at(i, j - 1) + 1);
            }
            let mut total = 0;
            for v in lo..=self.g {
                if self.remaining[v as usize] == 0 {
                    continue;
                }
                self.remaining[v as usize] -= 1;
                self.vals[(j * self.rows + i) as usize] = v;
                total += self.go(idx + 1);
                self.remaining[v as usize] += 1;
            }
            total
        }
    }

    let cells = (0..grid.width())
        .flat_map(|j| (0..grid.rows).filter(move |&i| j < mu.part(i as usize)).map(move |i| (i, j)))
        .collect();
    let mut remaining = vec![grid.r; grid.g as usize + 1];
    remaining[0] = 0;
    let mut red = Red {
        g: grid.g,
        rows: grid.rows,
        cells,
        vals: vec![0; (grid.rows * grid.width()) as usize],
        remaining,
    };
    red.go(0)
}

/// Blue fillings of the complement of `mu`.
fn count_blue(grid: FillingGrid, mu: &Partition) -> u64 {
    let mut count = 0u64;
    let width = grid.width();
    let rows = grid.rows;
    let mut cells: Vec<Option<Cell>> = vec![None; (rows * width) as usize];
    fn go(rows: u32, width: u32, mu: &Partition, idx: u32, cells: &mut Vec<Option<Cell>>, count: &mut u64) {
        if idx == rows * width {
            *count += 1;
            return;
        }
        let (j, i) = (idx / rows, idx % rows);
        if j < mu.part(i as usize) {
            // Red values never constrain blue ones; only the region matters.
            cells[idx as usize] = Some(Cell::Red(0));
            go(rows, width, mu, idx + 1, cells, count);
            cells[idx as usize] = None;
            return;
        }
        let at = |ii: u32, jj: u32| cells[(jj * rows + ii) as usize];
        let mut lo = 0;
        if j > 0 {
            if let Some(Cell::Blue(l)) = at(i, j - 1) {
                lo = l;
            }
        }
        if i > 0 {
            if let Some(Cell::Blue(a)) = at(i - 1, j) {
                lo = lo.max(a + 1);
            }
        }
        for v in lo..=i {
            cells[idx as usize] = Some(Cell::Blue(v));
            go(rows, width, mu, idx + 1, cells, count);
        }
        cells[idx as usize] = None;
    }
    go(rows, width, mu, 0, &mut cells, &mut count);
    count
}
