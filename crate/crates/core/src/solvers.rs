//! Equilibrium analysis on bimatrix games.
//!
//! All comparisons are weak with an absolute tolerance of 1e-9.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamedef::{classical_mixed_payoff, MixedProfile, StrategicGame};

pub const EQ_TOL: f64 = 1e-9;
/// Deviation grid used to validate mixed-equilibrium candidates.
const DEVIATION_GRID: usize = 101;

pub type Cell = (usize, usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Player {
    A,
    B,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquilibriumReport {
    pub labels_a: Vec<String>,
    pub labels_b: Vec<String>,
    pub pure_nash: Vec<Cell>,
    pub pareto_optimal: Vec<Cell>,
    /// Only for 2x2 games.
    pub mixed_nash_2x2: Option<Vec<(f64, f64)>>,
    /// Only when requested, and only for symmetric games.
    pub ess: Option<BTreeMap<usize, bool>>,
}

impl EquilibriumReport {
    pub fn analyze(game: &StrategicGame, with_ess: bool) -> Result<Self> {
        let mixed_nash_2x2 = if game.rows() == 2 && game.cols() == 2 {
            Some(mixed_nash_2x2(game)?)
        } else {
            None
        };
        let ess = if with_ess {
            let mut map = BTreeMap::new();
            for k in 0..game.rows() {
                map.insert(k, ess_check(game, k)?);
            }
            Some(map)
        } else {
            None
        };
        Ok(Self {
            labels_a: game.labels_a().to_vec(),
            labels_b: game.labels_b().to_vec(),
            pure_nash: pure_nash(game),
            pareto_optimal: pareto_optimal(game),
            mixed_nash_2x2,
            ess,
        })
    }
}

/// Cells where neither player has a profitable unilateral deviation.
pub fn pure_nash(game: &StrategicGame) -> Vec<Cell> {
    let mut out = Vec::new();
    for i in 0..game.rows() {
        for j in 0..game.cols() {
            let (a, b) = game.cell(i, j);
            let row_ok = (0..game.rows()).all(|k| a >= game.cell(k, j).0 - EQ_TOL);
            let col_ok = (0..game.cols()).all(|l| b >= game.cell(i, l).1 - EQ_TOL);
            if row_ok && col_ok {
                out.push((i, j));
            }
        }
    }
    out
}

/// Cells not strictly Pareto-dominated by another cell.
pub fn pareto_optimal(game: &StrategicGame) -> Vec<Cell> {
    let cells: Vec<Cell> = (0..game.rows())
        .flat_map(|i| (0..game.cols()).map(move |j| (i, j)))
        .collect();
    cells
        .iter()
        .copied()
        .filter(|&c| {
            !cells
                .iter()
                .any(|&d| dominates(game.cell(d.0, d.1), game.cell(c.0, c.1)))
        })
        .collect()
}

fn dominates(x: (f64, f64), y: (f64, f64)) -> bool {
    let weakly = x.0 >= y.0 - EQ_TOL && x.1 >= y.1 - EQ_TOL;
    let strictly = x.0 > y.0 + EQ_TOL || x.1 > y.1 + EQ_TOL;
    weakly && strictly
}

/// Argmax set of `player`'s payoff against the opponent's strategy `opponent_index`.
pub fn best_response(game: &StrategicGame, player: Player, opponent_index: usize) -> Result<Vec<usize>> {
    let (own, opp_len) = match player {
        Player::A => (game.rows(), game.cols()),
        Player::B => (game.cols(), game.rows()),
    };
    if opponent_index >= opp_len {
        return Err(Error::IndexOutOfRange {
            what: "opponent strategy",
            index: opponent_index,
            len: opp_len,
        });
    }
    let payoff = |k: usize| match player {
        Player::A => game.cell(k, opponent_index).0,
        Player::B => game.cell(opponent_index, k).1,
    };
    let best = (0..own).map(payoff).fold(f64::NEG_INFINITY, f64::max);
    Ok((0..own).filter(|&k| payoff(k) >= best - EQ_TOL).collect())
}

/// All mixed equilibria `(p*, q*)` of a 2x2 game found among corners,
/// edge indifference points and the interior indifference point, each
/// validated against a grid of unilateral deviations.
pub fn mixed_nash_2x2(game: &StrategicGame) -> Result<Vec<(f64, f64)>> {
    game.ensure_2x2()?;
    let a = |i, j| game.cell(i, j).0;
    let b = |i, j| game.cell(i, j).1;

    // Alice is indifferent when q·(a00 − a10) + (1 − q)·(a01 − a11) = 0.
    let q_indiff = indifference(a(0, 0) - a(1, 0), a(0, 1) - a(1, 1));
    // Bob is indifferent when p·(b00 − b01) + (1 − p)·(b10 − b11) = 0.
    let p_indiff = indifference(b(0, 0) - b(0, 1), b(1, 0) - b(1, 1));

    let mut candidates = vec![(0.0, 0.0), (0.0, 1.0), (1.0, 0.0), (1.0, 1.0)];
    if let Some(p) = p_indiff {
        candidates.extend([(p, 0.0), (p, 1.0)]);
    }
    if let Some(q) = q_indiff {
        candidates.extend([(0.0, q), (1.0, q)]);
    }
    if let (Some(p), Some(q)) = (p_indiff, q_indiff) {
        candidates.push((p, q));
    }

    let mut out: Vec<(f64, f64)> = Vec::new();
    for (p, q) in candidates {
        if out
            .iter()
            .any(|&(x, y)| (x - p).abs() <= EQ_TOL && (y - q).abs() <= EQ_TOL)
        {
            continue;
        }
        if is_mixed_equilibrium(game, p, q)? {
            out.push((p, q));
        }
    }
    out.sort_by(|x, y| x.partial_cmp(y).expect("finite profiles"));
    Ok(out)
}

/// Root in [0, 1] of `t·x + (1 − t)·y = 0` when it is unique.
fn indifference(x: f64, y: f64) -> Option<f64> {
    let denom = y - x;
    if denom.abs() <= EQ_TOL {
        return None;
    }
    let t = y / denom;
    (-EQ_TOL..=1.0 + EQ_TOL).contains(&t).then(|| t.clamp(0.0, 1.0))
}

/// No player gains by unilaterally moving to any deviation-grid profile.
pub fn is_mixed_equilibrium(game: &StrategicGame, p: f64, q: f64) -> Result<bool> {
    let (pa, pb) = classical_mixed_payoff(game, MixedProfile::new(p, q)?)?;
    for k in 0..DEVIATION_GRID {
        let t = k as f64 / (DEVIATION_GRID - 1) as f64;
        let (da, _) = classical_mixed_payoff(game, MixedProfile::new(t, q)?)?;
        let (_, db) = classical_mixed_payoff(game, MixedProfile::new(p, t)?)?;
        if da > pa + EQ_TOL || db > pb + EQ_TOL {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Maynard-Smith stability of pure strategy `index` in a symmetric game:
/// against every other `t`, either `u(s,s) > u(t,s)`, or `u(s,s) = u(t,s)`
/// and `u(s,t) > u(t,t)`.
pub fn ess_check(game: &StrategicGame, index: usize) -> Result<bool> {
    if let Some((row, col)) = game.asymmetry(EQ_TOL) {
        return Err(Error::AsymmetricGame { row, col });
    }
    let n = game.rows();
    if index >= n {
        return Err(Error::IndexOutOfRange {
            what: "strategy",
            index,
            len: n,
        });
    }
    let u = |x: usize, y: usize| game.cell(x, y).0;
    let s = index;
    Ok((0..n).filter(|&t| t != s).all(|t| {
        let first = u(s, s) - u(t, s);
        if first > EQ_TOL {
            true
        } else if first.abs() <= EQ_TOL {
            u(s, t) > u(t, t) + EQ_TOL
        } else {
            false
        }
    }))
}
