//! Pseudo-spectral solvers for the ε-dispersive flows on a periodic domain,
//! Madelung field extraction, and empirical weak limits.
//!
//! KdV (u_t − 6uu_x + ε²u_xxx = 0) is stepped with an integrating-factor
//! RK4: the stiff ε²∂ₓ³ term is integrated exactly in spectral space, the
//! nonlinearity 3∂ₓ(u²) is dealiased with the 2/3 rule. NLS
//! (iεu_t + ε²/2·u_xx + (1−|u|²)u = 0) is stepped with Strang splitting:
//! the nonlinear substep is an exact phase rotation (|u| invariant), the
//! linear substep is exact in spectral space, so mass is conserved to
//! roundoff and the scheme is time-symmetric.

use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::Serialize;

use crate::error::{CoreError, Result};
use crate::field::{ComplexField1, Grid1D, RealField1, SymTensorField2, VectorField2};
use crate::spectral::{dealias_mask, derivative_complex, wavenumbers};

/// Conserved quantities sampled at a snapshot time.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ConservedSample {
    pub time: f64,
    /// ∫u dx (KdV) or ∫|u|² dx (NLS).
    pub mass: f64,
    /// ∫u² dx (KdV) or ε·Im ∫ū·u_x dx (NLS).
    pub momentum: f64,
    /// ∫(ε²u_x²/2 + u³) dx (KdV) or ∫(ε²|u_x|²/2 + (|u|²−1)²/2) dx (NLS).
    pub energy: f64,
}

/// Snapshot record of a KdV run.
#[derive(Debug, Clone)]
pub struct KdvTrajectory {
    pub grid: Grid1D,
    pub epsilon: f64,
    pub dt: f64,
    pub times: Vec<f64>,
    pub frames: Vec<RealField1>,
    pub conserved_log: Vec<ConservedSample>,
}

/// Snapshot record of an NLS run.
#[derive(Debug, Clone)]
pub struct NlsTrajectory {
    pub grid: Grid1D,
    pub epsilon: f64,
    pub dt: f64,
    pub times: Vec<f64>,
    pub frames: Vec<ComplexField1>,
    pub conserved_log: Vec<ConservedSample>,
}

const BLOWUP_NORM: f64 = 1e6;
const KDV_CFL: f64 = 0.5;
const KDV_DRIFT_BOUND: f64 = 1e-6;
const NLS_MASS_DRIFT_BOUND: f64 = 1e-8;
const NLS_ENERGY_DRIFT_BOUND: f64 = 1e-6;

fn periodic_compatible(u0: &RealField1) -> Result<()> {
    let scale = u0.max_abs().max(1.0);
    let gap = (u0.values[0] - u0.values[u0.grid.n - 1]).abs();
    if gap > 1e-10 * scale {
        return Err(CoreError::Validation(format!(
            "initial data not periodic-compatible: boundary gap {gap:.3e}"
        )));
    }
    Ok(())
}

fn rel_drift(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(1e-12)
}

/// Integrate the ε-KdV flow from `u0` to `t_final` (negative `t_final`
/// integrates backward). Snapshots are stored every `snap_every` steps.
/// Drift of ∫u or ∫u² beyond 1e−6 relative fails the run.
pub fn solve_kdv(
    u0: &RealField1,
    epsilon: f64,
    dt: f64,
    t_final: f64,
    snap_every: usize,
) -> Result<KdvTrajectory> {
    if !(epsilon > 0.0) {
        return Err(CoreError::Domain(format!("epsilon = {epsilon} must be positive")));
    }
    if !(dt > 0.0) || t_final == 0.0 {
        return Err(CoreError::Domain("need dt > 0 and t_final != 0".into()));
    }
    periodic_compatible(u0)?;
    let grid = u0.grid;
    let n = grid.n;
    let direction = t_final.signum();
    let span = t_final.abs();

    // Stability rule for the dealiased advection term.
    let dt_cap = KDV_CFL * grid.dx() / u0.max_abs().max(1e-12);
    let steps = (span / dt.min(dt_cap)).ceil().max(1.0) as usize;
    let h = direction * span / steps as f64;

    let ks = wavenumbers(n, grid.length);
    let mask = dealias_mask(n);
    let mut planner = FftPlanner::new();
    let fft = planner.plan_fft_forward(n);
    let ifft = planner.plan_fft_inverse(n);
    let inv_n = 1.0 / n as f64;

    // Integrating factor e^{iε²k³τ} for û_t = iε²k³û + 3ik·(u²)̂.
    let phase = |tau: f64| -> Vec<Complex64> {
        ks.iter().map(|k| Complex64::new(0.0, epsilon * epsilon * k.powi(3) * tau).exp()).collect()
    };
    let e_full = phase(h);
    let e_half = phase(0.5 * h);

    let mut work = vec![Complex64::default(); n];
    let mut nonlinear = |hat: &[Complex64], out: &mut Vec<Complex64>| {
        work.copy_from_slice(hat);
        ifft.process(&mut work);
        for v in work.iter_mut() {
            let u = v.re * inv_n;
            *v = Complex64::new(u * u, 0.0);
        }
        fft.process(&mut work);
        out.clear();
        out.extend(work.iter().zip(&ks).zip(&mask).map(|((w, k), m)| {
            if *m {
                Complex64::new(0.0, 3.0 * k) * w
            } else {
                Complex64::default()
            }
        }));
    };

    let mut hat: Vec<Complex64> = u0.values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    fft.process(&mut hat);

    let conserved = |f: &RealField1| -> ConservedSample {
        let du = crate::spectral::derivative_real(f);
        let dx = grid.dx();
        ConservedSample {
            time: 0.0,
            mass: f.integral(),
            momentum: f.values.iter().map(|v| v * v).sum::<f64>() * dx,
            energy: f
                .values
                .iter()
                .zip(&du.values)
                .map(|(u, ux)| epsilon * epsilon * ux * ux / 2.0 + u * u * u)
                .sum::<f64>()
                * dx,
        }
    };

    let mut times = vec![0.0];
    let mut frames = vec![u0.clone()];
    let mut log = {
        let mut c = conserved(u0);
        c.time = 0.0;
        vec![c]
    };

    let (mut k1, mut k2, mut k3, mut k4) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    let mut stage = vec![Complex64::default(); n];
    let mut snapshot = vec![Complex64::default(); n];
    for step in 1..=steps {
        nonlinear(&hat, &mut k1);
        for i in 0..n {
            stage[i] = e_half[i] * (hat[i] + 0.5 * h * k1[i]);
        }
        nonlinear(&stage, &mut k2);
        for i in 0..n {
            stage[i] = e_half[i] * hat[i] + 0.5 * h * k2[i];
        }
        nonlinear(&stage, &mut k3);
        for i in 0..n {
            stage[i] = e_full[i] * hat[i] + h * e_half[i] * k3[i];
        }
        nonlinear(&stage, &mut k4);
        for i in 0..n {
            // k2, k3 live at the half step and ride e_half back to t+h.
            hat[i] = e_full[i] * hat[i]
                + h / 6.0 * (e_full[i] * k1[i] + 2.0 * e_half[i] * (k2[i] + k3[i]) + k4[i]);
        }
        let t = direction * span * step as f64 / steps as f64;
        if step % snap_every.max(1) == 0 || step == steps {
            snapshot.copy_from_slice(&hat);
            ifft.process(&mut snapshot);
            let f =
                RealField1 { grid, values: snapshot.iter().map(|v| v.re * inv_n).collect() };
            if !f.max_abs().is_finite() || f.max_abs() > BLOWUP_NORM {
                return Err(CoreError::Instability { time: t, norm_bound: BLOWUP_NORM });
            }
            let mut c = conserved(&f);
            c.time = t;
            times.push(t);
            frames.push(f);
            log.push(c);
        }
    }

    let first = &log[0];
    let last = &log[log.len() - 1];
    for (name, a, b) in
        [("mass", first.mass, last.mass), ("momentum", first.momentum, last.momentum)]
    {
        let drift = rel_drift(a, b);
        if drift > KDV_DRIFT_BOUND {
            return Err(CoreError::Validation(format!(
                "KdV {name} drift {drift:.3e} exceeds {KDV_DRIFT_BOUND:.1e}"
            )));
        }
    }
    Ok(KdvTrajectory { grid, epsilon, dt: h, times, frames, conserved_log: log })
}

/// Integrate the semiclassical NLS flow from WKB data u₀ = A·exp(iS/ε).
pub fn solve_nls(
    amplitude: &RealField1,
    phase_fn: &RealField1,
    epsilon: f64,
    dt: f64,
    t_final: f64,
    snap_every: usize,
) -> Result<NlsTrajectory> {
    if !amplitude.grid.same_as(&phase_fn.grid) {
        return Err(CoreError::GridMismatch("amplitude and phase grids differ".into()));
    }
    let u0 = ComplexField1 {
        grid: amplitude.grid,
        values: amplitude
            .values
            .iter()
            .zip(&phase_fn.values)
            .map(|(&a, &s)| Complex64::from_polar(a, s / epsilon))
            .collect(),
    };
    solve_nls_from(&u0, epsilon, dt, t_final, snap_every)
}

/// NLS stepper from an arbitrary complex initial frame (negative `t_final`
/// integrates backward). Mass/energy drift beyond the posted bounds fails
/// the run.
pub fn solve_nls_from(
    u0: &ComplexField1,
    epsilon: f64,
    dt: f64,
    t_final: f64,
    snap_every: usize,
) -> Result<NlsTrajectory> {
    if !(epsilon > 0.0) {
        return Err(CoreError::Domain(format!("epsilon = {epsilon} must be positive")));
    }
    if !(dt > 0.0) || t_final == 0.0 {
        return Err(CoreError::Domain("need dt > 0 and t_final != 0".into()));
    }
    let grid = u0.grid;
    let n = grid.n;
    let direction = t_final.signum();
    let span = t_final.abs();

    // Nonlinear-phase accuracy guard.
    let dt_cap = grid.dx() * grid.dx() / (std::f64::consts::PI * epsilon);
    let steps = (span / dt.min(dt_cap)).ceil().max(1.0) as usize;
    let h = direction * span / steps as f64;

    let ks = wavenumbers(n, grid.length);
    let mut planner = FftPlanner::new();
    let fft = planner.plan_fft_forward(n);
    let ifft = planner.plan_fft_inverse(n);
    let inv_n = 1.0 / n as f64;
    // Linear substep e^{−iεk²τ/2} for û_t = −iεk²û/2.
    let drift: Vec<Complex64> =
        ks.iter().map(|k| Complex64::new(0.0, -0.5 * epsilon * k * k * h).exp()).collect();

    let conserved = |f: &ComplexField1| -> ConservedSample {
        let du = derivative_complex(f);
        let dx = grid.dx();
        let mass = f.values.iter().map(|v| v.norm_sqr()).sum::<f64>() * dx;
        let momentum = epsilon
            * f.values.iter().zip(&du.values).map(|(u, ux)| (u.conj() * ux).im).sum::<f64>()
            * dx;
        let energy = f
            .values
            .iter()
            .zip(&du.values)
            .map(|(u, ux)| {
                0.5 * epsilon * epsilon * ux.norm_sqr() + 0.5 * (u.norm_sqr() - 1.0).powi(2)
            })
            .sum::<f64>()
            * dx;
        ConservedSample { time: 0.0, mass, momentum, energy }
    };

    let mut u = u0.values.clone();
    let kick = |u: &mut Vec<Complex64>, tau: f64| {
        for v in u.iter_mut() {
            let rot = Complex64::new(0.0, (1.0 - v.norm_sqr()) * tau / epsilon).exp();
            *v *= rot;
        }
    };

    let mut times = vec![0.0];
    let mut frames = vec![u0.clone()];
    let mut log = {
        let mut c = conserved(u0);
        c.time = 0.0;
        vec![c]
    };

    for step in 1..=steps {
        kick(&mut u, 0.5 * h);
        fft.process(&mut u);
        for (v, d) in u.iter_mut().zip(&drift) {
            *v *= d;
        }
        ifft.process(&mut u);
        for v in u.iter_mut() {
            *v *= inv_n;
        }
        kick(&mut u, 0.5 * h);

        let t = direction * span * step as f64 / steps as f64;
        if step % snap_every.max(1) == 0 || step == steps {
            let f = ComplexField1 { grid, values: u.clone() };
            if !f.max_abs().is_finite() || f.max_abs() > BLOWUP_NORM {
                return Err(CoreError::Instability { time: t, norm_bound: BLOWUP_NORM });
            }
            let mut c = conserved(&f);
            c.time = t;
            times.push(t);
            frames.push(f);
            log.push(c);
        }
    }

    let first = &log[0];
    let last = &log[log.len() - 1];
    let mass_drift = rel_drift(first.mass, last.mass);
    if mass_drift > NLS_MASS_DRIFT_BOUND {
        return Err(CoreError::Validation(format!(
            "NLS mass drift {mass_drift:.3e} exceeds {NLS_MASS_DRIFT_BOUND:.1e}"
        )));
    }
    let energy_drift = rel_drift(first.energy, last.energy);
    if energy_drift > NLS_ENERGY_DRIFT_BOUND {
        return Err(CoreError::Validation(format!(
            "NLS energy drift {energy_drift:.3e} exceeds {NLS_ENERGY_DRIFT_BOUND:.1e}"
        )));
    }
    Ok(NlsTrajectory { grid, epsilon, dt: h, times, frames, conserved_log: log })
}

/// Hydrodynamic fields of a complex frame: density ρ = |u|² and momentum
/// μ = ε·Im(ū·∂ₓu), the sign fixed so that ∂ₜρ + ∂ₓμ vanishes to solver
/// accuracy.
pub fn madelung(frame: &ComplexField1, epsilon: f64) -> (RealField1, RealField1) {
    let rho = frame.abs_sq();
    let du = derivative_complex(frame);
    let mu = RealField1 {
        grid: frame.grid,
        values: frame
            .values
            .iter()
            .zip(&du.values)
            .map(|(u, ux)| epsilon * (u.conj() * ux).im)
            .collect(),
    };
    (rho, mu)
}

/// Mollified weak-limit fields of a KdV ε-family at one output time.
#[derive(Debug, Clone)]
pub struct KdvWeakLimits {
    pub ubar: RealField1,
    pub u2bar: RealField1,
    /// L² distance between the mollified means of the two smallest ε.
    pub convergence_indicator: f64,
}

/// Mollified weak-limit fields of an NLS ε-family at one output time.
#[derive(Debug, Clone)]
pub struct NlsWeakLimits {
    pub rhobar: RealField1,
    pub mubar: RealField1,
    pub qbar: RealField1,
    pub convergence_indicator: f64,
}

fn smallest_two<T>(runs: &[T], eps: impl Fn(&T) -> f64) -> Result<(&T, &T)> {
    if runs.len() < 2 {
        return Err(CoreError::Validation("need at least two ε members".into()));
    }
    let mut order: Vec<usize> = (0..runs.len()).collect();
    order.sort_by(|&a, &b| eps(&runs[a]).total_cmp(&eps(&runs[b])));
    Ok((&runs[order[0]], &runs[order[1]]))
}

/// Weak limits (ū, ū²) from a family of KdV runs at frame `frame_index`,
/// mollified with a moving average of width `mollifier`.
pub fn ensemble_weak_limits_kdv(
    runs: &[KdvTrajectory],
    frame_index: usize,
    mollifier: f64,
) -> Result<KdvWeakLimits> {
    let (finest, next) = smallest_two(runs, |r| r.epsilon)?;
    for r in runs {
        if !r.grid.same_as(&finest.grid) {
            return Err(CoreError::GridMismatch("ensemble members on different grids".into()));
        }
        if r.frames.len() <= frame_index {
            return Err(CoreError::Validation(format!(
                "frame index {frame_index} out of range ({} frames)",
                r.frames.len()
            )));
        }
    }
    let u = &finest.frames[frame_index];
    let ubar = u.moving_average_periodic(mollifier)?;
    let u2bar = u.map(|v| v * v).moving_average_periodic(mollifier)?;
    // avg(u²) ≥ avg(u)² for the shared mollifier; anything beyond roundoff
    // is a bug upstream.
    let scale = u2bar.max_abs().max(1.0);
    for (a, b) in u2bar.values.iter().zip(&ubar.values) {
        if a - b * b < -1e-12 * scale {
            return Err(CoreError::Validation("convexity defect negative beyond roundoff".into()));
        }
    }
    let other = next.frames[frame_index].moving_average_periodic(mollifier)?;
    let diff = RealField1 {
        grid: ubar.grid,
        values: ubar.values.iter().zip(&other.values).map(|(a, b)| a - b).collect(),
    };
    Ok(KdvWeakLimits { ubar, u2bar, convergence_indicator: diff.l2_norm() })
}

/// Weak limits (ρ̄, μ̄, Q̄) from a family of NLS runs at frame `frame_index`.
/// Q(ρ, μ) = μ²/ρ + ρ²/2 is evaluated pointwise before mollification.
pub fn ensemble_weak_limits_nls(
    runs: &[NlsTrajectory],
    frame_index: usize,
    mollifier: f64,
) -> Result<NlsWeakLimits> {
    let (finest, next) = smallest_two(runs, |r| r.epsilon)?;
    for r in runs {
        if !r.grid.same_as(&finest.grid) {
            return Err(CoreError::GridMismatch("ensemble members on different grids".into()));
        }
        if r.frames.len() <= frame_index {
            return Err(CoreError::Validation(format!(
                "frame index {frame_index} out of range ({} frames)",
                r.frames.len()
            )));
        }
    }
    let frame = &finest.frames[frame_index];
    let (rho, mu) = madelung(frame, finest.epsilon);
    if rho.values.iter().any(|&r| !(r > 0.0)) {
        return Err(CoreError::Domain("density vanishes; Q(ρ, μ) undefined".into()));
    }
    let q = RealField1 {
        grid: rho.grid,
        values: rho
            .values
            .iter()
            .zip(&mu.values)
            .map(|(&r, &m)| m * m / r + r * r / 2.0)
            .collect(),
    };
    let rhobar = rho.moving_average_periodic(mollifier)?;
    let mubar = mu.moving_average_periodic(mollifier)?;
    let qbar = q.moving_average_periodic(mollifier)?;

    let (rho2, _) = madelung(&next.frames[frame_index], next.epsilon);
    let other = rho2.moving_average_periodic(mollifier)?;
    let diff = RealField1 {
        grid: rhobar.grid,
        values: rhobar.values.iter().zip(&other.values).map(|(a, b)| a - b).collect(),
    };
    Ok(NlsWeakLimits { rhobar, mubar, qbar, convergence_indicator: diff.l2_norm() })
}

/// Mollified squared deviation (u − ū)² of the finest member (the last) of
/// an ε-family; the scalar defect field in 1D.
pub fn defect_tensor_1d(
    members: &[RealField1],
    limit: &RealField1,
    mollifier: f64,
) -> Result<RealField1> {
    let Some(finest) = members.last() else {
        return Err(CoreError::Validation("empty ε-family".into()));
    };
    if !finest.grid.same_as(&limit.grid) {
        return Err(CoreError::GridMismatch("member and limit grids differ".into()));
    }
    let sq = RealField1 {
        grid: finest.grid,
        values: finest
            .values
            .iter()
            .zip(&limit.values)
            .map(|(u, l)| (u - l) * (u - l))
            .collect(),
    };
    sq.moving_average_periodic(mollifier)
}

/// 2×2 defect tensor of a 2D vector field against its limit, box-mollified
/// over `window` in both directions.
pub fn defect_tensor_2d(
    member: &VectorField2,
    limit: &VectorField2,
    window: f64,
) -> Result<SymTensorField2> {
    if member.nx != limit.nx || member.ny != limit.ny {
        return Err(CoreError::GridMismatch("2D fields have different shapes".into()));
    }
    let (nx, ny) = (member.nx, member.ny);
    let mut out = SymTensorField2::zeros(nx, ny);
    let dx = member.lx / nx as f64;
    let dy = member.ly / ny as f64;
    let hx = (window / (2.0 * dx)).round() as i64;
    let hy = (window / (2.0 * dy)).round() as i64;
    if hx < 1 && hy < 1 {
        return Err(CoreError::Domain("window smaller than both grid spacings".into()));
    }
    let count = ((2 * hx + 1) * (2 * hy + 1)) as f64;
    for j in 0..ny as i64 {
        for i in 0..nx as i64 {
            let (mut xx, mut xy, mut yy) = (0.0, 0.0, 0.0);
            for b in -hy..=hy {
                for a in -hx..=hx {
                    let ii = (i + a).rem_euclid(nx as i64) as usize;
                    let jj = (j + b).rem_euclid(ny as i64) as usize;
                    let k = jj * nx + ii;
                    let du = member.ux[k] - limit.ux[k];
                    let dv = member.uy[k] - limit.uy[k];
                    xx += du * du;
                    xy += du * dv;
                    yy += dv * dv;
                }
            }
            let k = j as usize * nx + i as usize;
            out.xx[k] = xx / count;
            out.xy[k] = xy / count;
            out.yy[k] = yy / count;
        }
    }
    Ok(out)
}

impl KdvTrajectory {
    /// Synthetic trajectory from precomputed frames (tests, file ingestion).
    pub fn from_frames(epsilon: f64, times: Vec<f64>, frames: Vec<RealField1>) -> Result<Self> {
        if times.len() != frames.len() || frames.is_empty() {
            return Err(CoreError::Validation("times and frames must match and be nonempty".into()));
        }
        if times.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(CoreError::Validation("times must be strictly increasing".into()));
        }
        let grid = frames[0].grid;
        if frames.iter().any(|f| !f.grid.same_as(&grid)) {
            return Err(CoreError::GridMismatch("frames on different grids".into()));
        }
        Ok(Self { grid, epsilon, dt: 0.0, times, frames, conserved_log: Vec::new() })
    }
}

impl NlsTrajectory {
    pub fn from_frames(epsilon: f64, times: Vec<f64>, frames: Vec<ComplexField1>) -> Result<Self> {
        if times.len() != frames.len() || frames.is_empty() {
            return Err(CoreError::Validation("times and frames must match and be nonempty".into()));
        }
        if times.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(CoreError::Validation("times must be strictly increasing".into()));
        }
        let grid = frames[0].grid;
        if frames.iter().any(|f| !f.grid.same_as(&grid)) {
            return Err(CoreError::GridMismatch("frames on different grids".into()));
        }
        Ok(Self { grid, epsilon, dt: 0.0, times, frames, conserved_log: Vec::new() })
    }
}
