//! Sweep builders behind the CLI subcommands. Each returns a [`SweepTable`]
//! assembled in grid order; evaluation is sequential so output bytes are
//! reproducible.

use vdw_core::instantaneous::{exact_energy_normal_modes, exact_energy_spectral, london_energy};
use vdw_core::kato::{
    build_coupled_pair_3channel, kato_energy_coefficient, verify_fourth_order_subtraction,
};
use vdw_core::retarded::{
    asymptote_casimir_polder, asymptote_london, e4_energy_closed, e4_energy_physical,
    e4_energy_reduced, e4_energy_tensor, log_grid, log_slope,
};
use vdw_core::specfun::QuadratureSpec;
use vdw_core::ModelParams;

use crate::error::CliError;
use crate::table::{Cell, SweepTable};

/// A validated sweep grid: positive ordered bounds, at least one point.
pub struct Grid {
    pub min: f64,
    pub max: f64,
    pub points: usize,
}

impl Grid {
    pub fn new(min: f64, max: f64, points: usize) -> Result<Self, CliError> {
        if points == 0 {
            return Err(CliError::config("empty grid: --points must be at least 1"));
        }
        if !(min.is_finite() && max.is_finite()) || min <= 0.0 || min > max {
            return Err(CliError::config(format!(
                "grid bounds must be positive and ordered, got [{min}, {max}]"
            )));
        }
        if points == 1 && min != max {
            return Err(CliError::config("a single-point grid needs equal lower and upper bounds"));
        }
        if points > 1 && min == max {
            return Err(CliError::config("a multi-point grid needs distinct bounds"));
        }
        Ok(Self { min, max, points })
    }

    pub fn linear(&self) -> Vec<f64> {
        if self.points == 1 {
            return vec![self.min];
        }
        let step = (self.max - self.min) / (self.points - 1) as f64;
        (0..self.points)
            .map(|i| if i == self.points - 1 { self.max } else { self.min + step * i as f64 })
            .collect()
    }

    pub fn logarithmic(&self) -> Vec<f64> {
        log_grid(self.min, self.max, self.points)
    }
}

/// `london`: columns (g, E_london, E_exact_re, E_exact_im, ratio) with
/// ratio = E_exact_re / E_london.
pub fn london_sweep(grid: &Grid, spec: &QuadratureSpec) -> Result<SweepTable, CliError> {
    let mut table = SweepTable::new(vec!["g", "E_london", "E_exact_re", "E_exact_im", "ratio"]);
    for g in grid.linear() {
        let london = london_energy(g)?;
        let exact = exact_energy_spectral(g, spec)?;
        table.push_row(vec![
            Cell::Num(g),
            Cell::Num(london),
            Cell::Num(exact.re),
            Cell::Num(exact.im),
            Cell::Num(exact.re / london),
        ])?;
    }
    Ok(table)
}

/// `instantaneous`: the spectral route next to the normal-mode oracle.
pub fn instantaneous_sweep(grid: &Grid, spec: &QuadratureSpec) -> Result<SweepTable, CliError> {
    let mut table =
        SweepTable::new(vec!["g", "E_spectral_re", "E_spectral_im", "E_modes_re", "E_modes_im"]);
    for g in grid.linear() {
        let spectral = exact_energy_spectral(g, spec)?;
        let modes = exact_energy_normal_modes(g);
        table.push_row(vec![
            Cell::Num(g),
            Cell::Num(spectral.re),
            Cell::Num(spectral.im),
            Cell::Num(modes.re),
            Cell::Num(modes.im),
        ])?;
    }
    Ok(table)
}

/// `retarded`: the three routes in the crossover normalization plus the
/// physical energy at separation `R = r·c/Ω` for the given parameters.
pub fn retarded_sweep(
    grid: &Grid,
    spec: &QuadratureSpec,
    params: &ModelParams,
) -> Result<SweepTable, CliError> {
    let mut table = SweepTable::new(vec![
        "r",
        "minus_E_r6_over_A2_closed",
        "minus_E_r6_over_A2_reduced",
        "minus_E_r6_over_A2_tensor",
        "E_physical",
    ]);
    for r in grid.logarithmic() {
        let closed = e4_energy_closed(r)?;
        let reduced = e4_energy_reduced(r, spec)?;
        let tensor = e4_energy_tensor(r, spec)?;
        let separation = r * params.c() / params.omega();
        let physical = e4_energy_physical(params, separation)?;
        table.push_row(vec![
            Cell::Num(r),
            Cell::Num(closed),
            Cell::Num(reduced),
            Cell::Num(tensor),
            Cell::Num(physical),
        ])?;
    }
    Ok(table)
}

/// The crossover data behind both the CSV table and the SVG figure.
pub struct CrossoverData {
    pub grid: Vec<f64>,
    pub energy: Vec<f64>,
    /// Present only when the grid has at least 3 points (stencil width).
    pub slope: Option<Vec<f64>>,
}

pub fn crossover_data(grid: &Grid) -> Result<CrossoverData, CliError> {
    let rs = grid.logarithmic();
    let energy = rs.iter().map(|&r| e4_energy_closed(r)).collect::<Result<Vec<_>, _>>()?;
    let slope = if rs.len() >= 3 { Some(log_slope(&rs, &energy)?) } else { None };
    Ok(CrossoverData { grid: rs, energy, slope })
}

/// `crossover`: columns (r, minus_E_r6_over_A2, slope, london_asymptote,
/// cp_asymptote); the slope cell is empty when the grid is too short for
/// the stencil.
pub fn crossover_sweep(grid: &Grid) -> Result<SweepTable, CliError> {
    let data = crossover_data(grid)?;
    let mut table = SweepTable::new(vec![
        "r",
        "minus_E_r6_over_A2",
        "slope",
        "london_asymptote",
        "cp_asymptote",
    ]);
    for (i, &r) in data.grid.iter().enumerate() {
        let slope_cell = match &data.slope {
            Some(s) => Cell::Num(s[i]),
            None => Cell::Empty,
        };
        table.push_row(vec![
            Cell::Num(r),
            Cell::Num(data.energy[i]),
            slope_cell,
            Cell::Num(asymptote_london()),
            Cell::Num(asymptote_casimir_polder() / r),
        ])?;
    }
    Ok(table)
}

/// `kato`: columns (order, E_n, partial_sum, exact_normal_mode, residual)
/// for the three-channel pair at coupling `g`.
pub fn kato_sweep(g: f64, n_max: usize, max_order: usize) -> Result<SweepTable, CliError> {
    if max_order == 0 || max_order > 6 {
        return Err(CliError::config("--order must lie in 1..=6"));
    }
    if n_max < max_order {
        return Err(CliError::config(format!(
            "--nmax ({n_max}) must be at least --order ({max_order})"
        )));
    }
    if !g.is_finite() || g < 0.0 {
        return Err(CliError::config(format!("coupling must be nonnegative, got {g}")));
    }
    let (h0, hint) = build_coupled_pair_3channel(g, n_max)?;
    let exact = exact_energy_normal_modes(g).re;
    let mut table =
        SweepTable::new(vec!["order", "E_n", "partial_sum", "exact_normal_mode", "residual"]);
    let mut partial = 0.0;
    for n in 1..=max_order {
        let coeff = kato_energy_coefficient(&h0, &hint, n)?;
        partial += coeff;
        table.push_row(vec![
            Cell::Int(n as u64),
            Cell::Num(coeff),
            Cell::Num(partial),
            Cell::Num(exact),
            Cell::Num(partial - exact),
        ])?;
    }
    // the fourth-order identity must hold whenever the truncation admits it
    if max_order >= 4 && n_max >= 4 {
        verify_fourth_order_subtraction(&h0, &hint)?;
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_validation() {
        assert!(Grid::new(0.0, 1.0, 5).is_err());
        assert!(Grid::new(2.0, 1.0, 5).is_err());
        assert!(Grid::new(1.0, 2.0, 0).is_err());
        assert!(Grid::new(1.0, 2.0, 1).is_err());
        assert!(Grid::new(1.0, 1.0, 3).is_err());
        let g = Grid::new(1.0, 1.0, 1).unwrap();
        assert_eq!(g.linear(), vec![1.0]);
    }

    #[test]
    fn linear_grid_hits_endpoints() {
        let g = Grid::new(0.1, 0.9, 5).unwrap();
        let pts = g.linear();
        assert_eq!(pts.len(), 5);
        assert_eq!(pts[0], 0.1);
        assert_eq!(pts[4], 0.9);
    }

    #[test]
    fn kato_sweep_guards() {
        assert!(kato_sweep(0.1, 2, 4).is_err());
        assert!(kato_sweep(0.1, 4, 7).is_err());
        assert!(kato_sweep(-0.1, 4, 4).is_err());
    }

    #[test]
    fn crossover_single_point_has_empty_slope() {
        let grid = Grid::new(1.0, 1.0, 1).unwrap();
        let table = crossover_sweep(&grid).unwrap();
        let csv = table.to_csv();
        let mut lines = csv.lines();
        lines.next().unwrap();
        let row = lines.next().unwrap();
        let cells: Vec<&str> = row.split(',').collect();
        assert_eq!(cells.len(), 5);
        assert!(cells[2].is_empty(), "slope cell should be empty: {row}");
    }
}
