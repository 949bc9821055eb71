//! Sampled fields on uniform grids.
//!
//! `Grid1D` is a periodic 1D grid (the solver and Wigner grids); fields are
//! plain sample vectors carrying their grid. A small 2D vector-field type
//! supports the trace-free tensor diagnostics.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};

/// Uniform periodic grid on `[origin, origin + length)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid1D {
    pub length: f64,
    pub n: usize,
    pub origin: f64,
}

impl Grid1D {
    /// Periodic grid with `n` points (power of two, ≥ 16) on `[-length/2, length/2)`.
    pub fn centered(length: f64, n: usize) -> Result<Self> {
        Self::new(length, n, -length / 2.0)
    }

    pub fn new(length: f64, n: usize, origin: f64) -> Result<Self> {
        if !(length > 0.0) {
            return Err(CoreError::Domain(format!("grid length must be positive, got {length}")));
        }
        if n < 16 || !n.is_power_of_two() {
            return Err(CoreError::Domain(format!(
                "grid size must be a power of two ≥ 16, got {n}"
            )));
        }
        Ok(Self { length, n, origin })
    }

    #[inline]
    pub fn dx(&self) -> f64 {
        self.length / self.n as f64
    }

    #[inline]
    pub fn x(&self, i: usize) -> f64 {
        self.origin + i as f64 * self.dx()
    }

    pub fn abscissae(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.x(i)).collect()
    }

    /// Index of the grid point nearest to `x` (periodic wrap).
    pub fn nearest_index(&self, x: f64) -> usize {
        let rel = (x - self.origin) / self.dx();
        let i = rel.round() as i64;
        i.rem_euclid(self.n as i64) as usize
    }

    pub fn same_as(&self, other: &Grid1D) -> bool {
        self.n == other.n
            && (self.length - other.length).abs() <= 1e-12 * self.length.abs()
            && (self.origin - other.origin).abs() <= 1e-12 * self.length.abs()
    }
}

/// Real scalar field sampled on a periodic grid.
#[derive(Debug, Clone, PartialEq)]
pub struct RealField1 {
    pub grid: Grid1D,
    pub values: Vec<f64>,
}

/// Complex scalar field sampled on a periodic grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexField1 {
    pub grid: Grid1D,
    pub values: Vec<Complex64>,
}

impl RealField1 {
    pub fn new(grid: Grid1D, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.n {
            return Err(CoreError::GridMismatch(format!(
                "{} samples on a {}-point grid",
                values.len(),
                grid.n
            )));
        }
        Ok(Self { grid, values })
    }

    pub fn from_fn(grid: Grid1D, f: impl Fn(f64) -> f64) -> Self {
        let values = (0..grid.n).map(|i| f(grid.x(i))).collect();
        Self { grid, values }
    }

    pub fn constant(grid: Grid1D, c: f64) -> Self {
        Self { grid, values: vec![c; grid.n] }
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        Self { grid: self.grid, values: self.values.iter().map(|&v| f(v)).collect() }
    }

    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.grid.n as f64
    }

    /// ∫ f dx over the period.
    pub fn integral(&self) -> f64 {
        self.values.iter().sum::<f64>() * self.grid.dx()
    }

    /// L² norm over the period, (∫ f² dx)^(1/2).
    pub fn l2_norm(&self) -> f64 {
        (self.values.iter().map(|v| v * v).sum::<f64>() * self.grid.dx()).sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }

    /// Centered finite-difference derivative with periodic wrap.
    pub fn derivative_central(&self) -> RealField1 {
        let n = self.grid.n;
        let two_dx = 2.0 * self.grid.dx();
        let values = (0..n)
            .map(|i| (self.values[(i + 1) % n] - self.values[(i + n - 1) % n]) / two_dx)
            .collect();
        Self { grid: self.grid, values }
    }

    /// Circular moving average over a window of physical width `window`.
    pub fn moving_average_periodic(&self, window: f64) -> Result<RealField1> {
        let half = half_window(self.grid.dx(), self.grid.length, window)?;
        let n = self.grid.n as i64;
        let count = (2 * half + 1) as f64;
        let values = (0..n)
            .map(|i| {
                let mut acc = 0.0;
                for j in -half..=half {
                    acc += self.values[(i + j).rem_euclid(n) as usize];
                }
                acc / count
            })
            .collect();
        Ok(Self { grid: self.grid, values })
    }

    /// Moving average with the window truncated at the domain edges
    /// (non-periodic data such as lattice segments).
    pub fn moving_average_truncated(&self, window: f64) -> Result<RealField1> {
        let half = half_window(self.grid.dx(), self.grid.length, window)?;
        let n = self.grid.n as i64;
        let values = (0..n)
            .map(|i| {
                let lo = (i - half).max(0);
                let hi = (i + half).min(n - 1);
                let mut acc = 0.0;
                for j in lo..=hi {
                    acc += self.values[j as usize];
                }
                acc / (hi - lo + 1) as f64
            })
            .collect();
        Ok(Self { grid: self.grid, values })
    }

    pub fn to_complex(&self) -> ComplexField1 {
        ComplexField1 {
            grid: self.grid,
            values: self.values.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
        }
    }
}

fn half_window(dx: f64, length: f64, window: f64) -> Result<i64> {
    if window < dx {
        return Err(CoreError::Domain(format!(
            "averaging window {window} is smaller than the grid spacing {dx}"
        )));
    }
    if window > length {
        return Err(CoreError::Domain(format!(
            "averaging window {window} exceeds the domain length {length}"
        )));
    }
    Ok((window / (2.0 * dx)).round() as i64)
}

impl ComplexField1 {
    pub fn new(grid: Grid1D, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.n {
            return Err(CoreError::GridMismatch(format!(
                "{} samples on a {}-point grid",
                values.len(),
                grid.n
            )));
        }
        Ok(Self { grid, values })
    }

    pub fn from_fn(grid: Grid1D, f: impl Fn(f64) -> Complex64) -> Self {
        let values = (0..grid.n).map(|i| f(grid.x(i))).collect();
        Self { grid, values }
    }

    pub fn abs_sq(&self) -> RealField1 {
        RealField1 { grid: self.grid, values: self.values.iter().map(|v| v.norm_sqr()).collect() }
    }

    pub fn l2_norm(&self) -> f64 {
        (self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() * self.grid.dx()).sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, v| m.max(v.norm()))
    }
}

/// Real field with an undefined-region mask (quotients with vanishing
/// denominators). `values[i]` is meaningful only where `defined[i]`.
#[derive(Debug, Clone)]
pub struct MaskedField1 {
    pub grid: Grid1D,
    pub values: Vec<f64>,
    pub defined: Vec<bool>,
}

impl MaskedField1 {
    pub fn defined_count(&self) -> usize {
        self.defined.iter().filter(|&&d| d).count()
    }

    pub fn iter_defined(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.values
            .iter()
            .zip(self.defined.iter())
            .enumerate()
            .filter_map(|(i, (&v, &d))| d.then_some((i, v)))
    }
}

/// 2D vector field (u₁, u₂) on a doubly periodic rectangle, row-major in y.
#[derive(Debug, Clone)]
pub struct VectorField2 {
    pub nx: usize,
    pub ny: usize,
    pub lx: f64,
    pub ly: f64,
    pub ux: Vec<f64>,
    pub uy: Vec<f64>,
}

impl VectorField2 {
    pub fn from_fn(
        nx: usize,
        ny: usize,
        lx: f64,
        ly: f64,
        f: impl Fn(f64, f64) -> (f64, f64),
    ) -> Self {
        let (dx, dy) = (lx / nx as f64, ly / ny as f64);
        let mut ux = Vec::with_capacity(nx * ny);
        let mut uy = Vec::with_capacity(nx * ny);
        for j in 0..ny {
            for i in 0..nx {
                let (a, b) = f(i as f64 * dx, j as f64 * dy);
                ux.push(a);
                uy.push(b);
            }
        }
        Self { nx, ny, lx, ly, ux, uy }
    }

    #[inline]
    pub fn idx(&self, i: usize, j: usize) -> usize {
        j * self.nx + i
    }
}

/// Symmetric 2×2 tensor field on the same layout as [`VectorField2`].
#[derive(Debug, Clone)]
pub struct SymTensorField2 {
    pub nx: usize,
    pub ny: usize,
    pub xx: Vec<f64>,
    pub xy: Vec<f64>,
    pub yy: Vec<f64>,
}

impl SymTensorField2 {
    pub fn zeros(nx: usize, ny: usize) -> Self {
        let z = vec![0.0; nx * ny];
        Self { nx, ny, xx: z.clone(), xy: z.clone(), yy: z }
    }

    pub fn trace_half(&self) -> Vec<f64> {
        self.xx.iter().zip(&self.yy).map(|(a, c)| 0.5 * (a + c)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_rejects_bad_sizes() {
        assert!(Grid1D::centered(10.0, 15).is_err());
        assert!(Grid1D::centered(10.0, 48).is_err());
        assert!(Grid1D::centered(-1.0, 32).is_err());
        assert!(Grid1D::centered(10.0, 32).is_ok());
    }

    #[test]
    fn moving_average_of_constant_is_identity() {
        let g = Grid1D::centered(4.0, 64).unwrap();
        let f = RealField1::constant(g, 3.5);
        let avg = f.moving_average_periodic(1.0).unwrap();
        assert!(avg.values.iter().all(|&v| (v - 3.5).abs() < 1e-14));
        let avg = f.moving_average_truncated(1.0).unwrap();
        assert!(avg.values.iter().all(|&v| (v - 3.5).abs() < 1e-14));
    }

    #[test]
    fn window_smaller_than_spacing_is_rejected() {
        let g = Grid1D::centered(4.0, 64).unwrap();
        let f = RealField1::constant(g, 1.0);
        assert!(f.moving_average_periodic(0.01).is_err());
    }

    #[test]
    fn central_derivative_of_sine() {
        let g = Grid1D::new(2.0 * std::f64::consts::PI, 256, 0.0).unwrap();
        let f = RealField1::from_fn(g, f64::sin);
        let d = f.derivative_central();
        for i in 0..g.n {
            assert!((d.values[i] - g.x(i).cos()).abs() < 1e-3);
        }
    }
}
