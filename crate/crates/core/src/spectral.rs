//! FFT helpers shared by the solvers and the Wigner transforms.
//!
//! Conventions: forward transform is unnormalized (rustfft), inverse carries
//! the 1/N; wavenumbers follow the usual [0..N/2, -N/2..-1]·(2π/L) layout.

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::field::{ComplexField1, RealField1};

pub fn fft_inplace(data: &mut [Complex64]) {
    let mut planner = FftPlanner::new();
    planner.plan_fft_forward(data.len()).process(data);
}

pub fn ifft_inplace(data: &mut [Complex64]) {
    let n = data.len();
    let mut planner = FftPlanner::new();
    planner.plan_fft_inverse(n).process(data);
    let scale = 1.0 / n as f64;
    for v in data.iter_mut() {
        *v *= scale;
    }
}

/// Angular wavenumbers 2π/L · [0, 1, …, N/2−1, −N/2, …, −1].
pub fn wavenumbers(n: usize, length: f64) -> Vec<f64> {
    let base = 2.0 * std::f64::consts::PI / length;
    (0..n)
        .map(|i| {
            let m = if i <= n / 2 - 1 { i as i64 } else { i as i64 - n as i64 };
            base * m as f64
        })
        .collect()
}

/// Spectral derivative of a complex periodic field.
pub fn derivative_complex(f: &ComplexField1) -> ComplexField1 {
    let ks = wavenumbers(f.grid.n, f.grid.length);
    let mut hat = f.values.clone();
    fft_inplace(&mut hat);
    for (v, k) in hat.iter_mut().zip(&ks) {
        *v *= Complex64::new(0.0, *k);
    }
    ifft_inplace(&mut hat);
    ComplexField1 { grid: f.grid, values: hat }
}

/// Spectral derivative of a real periodic field.
pub fn derivative_real(f: &RealField1) -> RealField1 {
    let d = derivative_complex(&f.to_complex());
    RealField1 { grid: f.grid, values: d.values.iter().map(|v| v.re).collect() }
}

/// 2/3-rule dealiasing mask: zero the top third of the spectrum.
pub fn dealias_mask(n: usize) -> Vec<bool> {
    let cut = n / 3;
    (0..n)
        .map(|i| {
            let m = if i <= n / 2 { i as i64 } else { i as i64 - n as i64 };
            m.unsigned_abs() as usize <= cut
        })
        .collect()
}

/// Spectral ∂/∂x and ∂/∂y of a scalar on the doubly periodic `nx`×`ny` grid
/// (row-major in y). Used by the 2D tensor diagnostics.
pub fn gradient_2d(
    values: &[f64],
    nx: usize,
    ny: usize,
    lx: f64,
    ly: f64,
) -> (Vec<f64>, Vec<f64>) {
    let kx = wavenumbers(nx, lx);
    let ky = wavenumbers(ny, ly);
    let mut hat: Vec<Complex64> = values.iter().map(|&v| Complex64::new(v, 0.0)).collect();

    // FFT rows (x), then columns (y).
    let mut planner = FftPlanner::new();
    let fx = planner.plan_fft_forward(nx);
    for row in hat.chunks_mut(nx) {
        fx.process(row);
    }
    let fy = planner.plan_fft_forward(ny);
    let mut col = vec![Complex64::default(); ny];
    for i in 0..nx {
        for j in 0..ny {
            col[j] = hat[j * nx + i];
        }
        fy.process(&mut col);
        for j in 0..ny {
            hat[j * nx + i] = col[j];
        }
    }

    let mut dx_hat = hat.clone();
    let mut dy_hat = hat;
    for j in 0..ny {
        for i in 0..nx {
            dx_hat[j * nx + i] *= Complex64::new(0.0, kx[i]);
            dy_hat[j * nx + i] *= Complex64::new(0.0, ky[j]);
        }
    }

    let mut inv = |mut m: Vec<Complex64>| -> Vec<f64> {
        let ix = planner.plan_fft_inverse(nx);
        let iy = planner.plan_fft_inverse(ny);
        let mut col = vec![Complex64::default(); ny];
        for i in 0..nx {
            for j in 0..ny {
                col[j] = m[j * nx + i];
            }
            iy.process(&mut col);
            for j in 0..ny {
                m[j * nx + i] = col[j];
            }
        }
        for row in m.chunks_mut(nx) {
            ix.process(row);
        }
        let scale = 1.0 / (nx * ny) as f64;
        m.iter().map(|v| v.re * scale).collect()
    };

    (inv(dx_hat), inv(dy_hat))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Grid1D;

    #[test]
    fn derivative_of_plane_wave_is_exact() {
        let g = Grid1D::new(2.0 * std::f64::consts::PI, 64, 0.0).unwrap();
        let f = ComplexField1::from_fn(g, |x| Complex64::new(0.0, 3.0 * x).exp());
        let d = derivative_complex(&f);
        for (i, v) in d.values.iter().enumerate() {
            let expect = Complex64::new(0.0, 3.0) * Complex64::new(0.0, 3.0 * g.x(i)).exp();
            assert!((v - expect).norm() < 1e-10);
        }
    }

    #[test]
    fn gradient_2d_of_trig() {
        let (nx, ny) = (32, 32);
        let (lx, ly) = (2.0 * std::f64::consts::PI, 2.0 * std::f64::consts::PI);
        let mut vals = vec![0.0; nx * ny];
        for j in 0..ny {
            for i in 0..nx {
                let (x, y) = (i as f64 * lx / nx as f64, j as f64 * ly / ny as f64);
                vals[j * nx + i] = (2.0 * x).sin() * y.cos();
            }
        }
        let (gx, gy) = gradient_2d(&vals, nx, ny, lx, ly);
        for j in 0..ny {
            for i in 0..nx {
                let (x, y) = (i as f64 * lx / nx as f64, j as f64 * ly / ny as f64);
                assert!((gx[j * nx + i] - 2.0 * (2.0 * x).cos() * y.cos()).abs() < 1e-10);
                assert!((gy[j * nx + i] + (2.0 * x).sin() * y.sin()).abs() < 1e-10);
            }
        }
    }
}
