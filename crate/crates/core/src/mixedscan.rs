//! Mixed-strategy payoff surfaces on the entangled Bell state.
//!
//! Each player mixes the identity (probability `p` for Alice, `q` for Bob)
//! with the bit flip. The canonical Hawk-Dove surface has the fast path
//! `−60pq + 30(p+q) − 5`; other parameters go through the density-matrix
//! computation directly.

use std::io::{self, Write};

use crate::error::{Error, Result};
use crate::gamedef::{check_probability, fmt_shortest, hawk_dove_game, HawkDoveParams, Payoff};
use crate::qscheme::{expected_payoffs, mw_final_density, payoff_operators, InitialState, StrategyOperator};

const ARGMAX_TOL: f64 = 1e-9;

pub const CSV_HEADER: &str = "p,q,payoff_a,payoff_b";

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Surface {
    HawkDove(HawkDoveParams),
    PrisonersDilemma,
}

impl Surface {
    /// `(payoff_a, payoff_b)` at the profile `(p, q)`.
    pub fn payoff(&self, p: f64, q: f64) -> Result<Payoff> {
        match self {
            Self::HawkDove(params) if params.is_canonical() => {
                let x = hd_mixed_payoff(p, q, *params)?;
                Ok((x, x))
            }
            Self::HawkDove(params) => {
                check_probability("p", p)?;
                check_probability("q", q)?;
                mw_mixed_payoffs(p, q, *params)
            }
            Self::PrisonersDilemma => {
                let x = pd_mixed_payoff(p, q)?;
                Ok((x, x))
            }
        }
    }
}

/// Bell-state mixed payoff through the density matrix.
fn mw_mixed_payoffs(p: f64, q: f64, params: HawkDoveParams) -> Result<Payoff> {
    let ops = payoff_operators(&hawk_dove_game(params))?;
    let mix = |w| StrategyOperator::binary_mixture(w, StrategyOperator::identity(), StrategyOperator::pauli_x());
    let rho = mw_final_density(&InitialState::BellPlus, &mix(p)?, &mix(q)?)?;
    expected_payoffs(&rho, &ops)
}

/// Symmetric Hawk-Dove payoff for mixed play on the Bell state.
pub fn hd_mixed_payoff(p: f64, q: f64, params: HawkDoveParams) -> Result<f64> {
    check_probability("p", p)?;
    check_probability("q", q)?;
    if params.is_canonical() {
        return Ok(-60.0 * p * q + 30.0 * (p + q) - 5.0);
    }
    Ok(mw_mixed_payoffs(p, q, params)?.0)
}

/// `(4 − 2pq + p + q) / 2`
pub fn pd_mixed_payoff(p: f64, q: f64) -> Result<f64> {
    check_probability("p", p)?;
    check_probability("q", q)?;
    Ok(0.5 * (4.0 - 2.0 * p * q + p + q))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridCell {
    pub p: f64,
    pub q: f64,
    pub payoff_a: f64,
    pub payoff_b: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PayoffGrid {
    resolution: usize,
    /// Row-major: `p` outer, `q` inner.
    cells: Vec<GridCell>,
}

impl PayoffGrid {
    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn cells(&self) -> &[GridCell] {
        &self.cells
    }

    pub fn cell(&self, p_index: usize, q_index: usize) -> &GridCell {
        &self.cells[p_index * self.resolution + q_index]
    }

    pub fn max_payoff(&self) -> f64 {
        self.cells.iter().map(|c| c.payoff_a).fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn write_csv<W: Write>(&self, out: W) -> io::Result<()> {
        write_cells_csv(&self.cells, out)
    }
}

/// Lattice coordinate `k / (resolution − 1)`.
pub fn lattice_point(k: usize, resolution: usize) -> f64 {
    k as f64 / (resolution - 1) as f64
}

pub fn grid_scan(surface: Surface, resolution: usize) -> Result<PayoffGrid> {
    if resolution < 2 {
        return Err(Error::ResolutionTooSmall(resolution));
    }
    let mut cells = Vec::with_capacity(resolution * resolution);
    for i in 0..resolution {
        let p = lattice_point(i, resolution);
        for j in 0..resolution {
            let q = lattice_point(j, resolution);
            let (payoff_a, payoff_b) = surface.payoff(p, q)?;
            cells.push(GridCell {
                p,
                q,
                payoff_a,
                payoff_b,
            });
        }
    }
    Ok(PayoffGrid { resolution, cells })
}

/// Lattice points whose `payoff_a` is within 1e-9 of the grid maximum.
pub fn grid_argmax(grid: &PayoffGrid) -> Vec<(f64, f64)> {
    let max = grid.max_payoff();
    grid.cells
        .iter()
        .filter(|c| c.payoff_a >= max - ARGMAX_TOL)
        .map(|c| (c.p, c.q))
        .collect()
}

/// Lattice points with payoff strictly above a threshold.
#[derive(Debug, Clone, PartialEq)]
pub struct Region {
    pub threshold: f64,
    members: Vec<GridCell>,
}

impl Region {
    pub fn members(&self) -> &[GridCell] {
        &self.members
    }

    pub fn points(&self) -> Vec<(f64, f64)> {
        self.members.iter().map(|c| (c.p, c.q)).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: f64, q: f64, tol: f64) -> bool {
        self.members
            .iter()
            .any(|c| (c.p - p).abs() <= tol && (c.q - q).abs() <= tol)
    }

    /// `(p_min, p_max, q_min, q_max)` of the members.
    pub fn bounding_box(&self) -> Option<(f64, f64, f64, f64)> {
        let first = self.members.first()?;
        Some(
            self.members
                .iter()
                .fold((first.p, first.p, first.q, first.q), |(p0, p1, q0, q1), c| {
                    (p0.min(c.p), p1.max(c.p), q0.min(c.q), q1.max(c.q))
                }),
        )
    }

    pub fn write_csv<W: Write>(&self, out: W) -> io::Result<()> {
        write_cells_csv(&self.members, out)
    }
}

pub fn region_above(surface: Surface, threshold: f64, resolution: usize) -> Result<Region> {
    let grid = grid_scan(surface, resolution)?;
    let members = grid.cells.into_iter().filter(|c| c.payoff_a > threshold).collect();
    Ok(Region { threshold, members })
}

fn write_cells_csv<W: Write>(cells: &[GridCell], mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for c in cells {
        writeln!(
            out,
            "{},{},{},{}",
            fmt_shortest(c.p),
            fmt_shortest(c.q),
            fmt_shortest(c.payoff_a),
            fmt_shortest(c.payoff_b)
        )?;
    }
    Ok(())
}
