//! Number and table rendering.

use crate::gamedef::{fmt_shortest, StrategicGame};

/// Below this magnitude a value prints as 0.
const DISPLAY_ZERO: f64 = 1e-12;

/// Rounds to 9 significant digits.
pub fn round_sig9(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    if x.abs() < DISPLAY_ZERO {
        return 0.0;
    }
    let r: f64 = format!("{x:.8e}").parse().expect("scientific literal parses");
    r + 0.0
}

/// Up to 9 significant digits, trailing zeros trimmed.
pub fn fmt_sig9(x: f64) -> String {
    fmt_shortest(round_sig9(x))
}

/// Copy of the game with payoffs rounded to 9 significant digits.
pub fn rounded(game: &StrategicGame) -> StrategicGame {
    let payoffs = game
        .payoffs()
        .iter()
        .map(|row| row.iter().map(|&(a, b)| (round_sig9(a), round_sig9(b))).collect())
        .collect();
    StrategicGame::new(game.labels_a().to_vec(), game.labels_b().to_vec(), payoffs)
        .expect("rounding keeps a valid game")
}

pub fn ascii_table(game: &StrategicGame) -> String {
    let cell = |i: usize, j: usize| {
        let (a, b) = game.cell(i, j);
        format!("({}, {})", fmt_sig9(a), fmt_sig9(b))
    };
    let label_w = game.labels_a().iter().map(|l| l.chars().count()).max().unwrap_or(0);
    let col_w: Vec<usize> = (0..game.cols())
        .map(|j| {
            (0..game.rows())
                .map(|i| cell(i, j).chars().count())
                .chain(std::iter::once(game.labels_b()[j].chars().count()))
                .max()
                .unwrap_or(0)
        })
        .collect();

    let mut out = String::new();
    let mut header = " ".repeat(label_w);
    for (j, l) in game.labels_b().iter().enumerate() {
        header.push_str(&format!("  {:<w$}", l, w = col_w[j]));
    }
    out.push_str(header.trim_end());
    out.push('\n');
    for (i, l) in game.labels_a().iter().enumerate() {
        let mut line = format!("{:<w$}", l, w = label_w);
        for (j, w) in col_w.iter().enumerate() {
            line.push_str(&format!("  {:<w$}", cell(i, j), w = *w));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Quotes labels such as `u(1,0)` that would otherwise split the row.
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn csv_table(game: &StrategicGame) -> String {
    let mut out = String::from("row,col,payoff_a,payoff_b\n");
    for (i, la) in game.labels_a().iter().enumerate() {
        for (j, lb) in game.labels_b().iter().enumerate() {
            let (a, b) = game.cell(i, j);
            out.push_str(&format!(
                "{},{},{},{}\n",
                csv_field(la),
                csv_field(lb),
                fmt_sig9(a),
                fmt_sig9(b)
            ));
        }
    }
    out
}
