//! Simplicial-volume upper bounds from twist statistics.
//!
//! Bounds are reported in units of `v3`, the volume of the regular ideal
//! tetrahedron, and as volumes.

use std::f64::consts::PI;

use serde::Serialize;

use crate::diagram::LinkDiagram;
use crate::error::BoundError;
use crate::twist::{twist_regions, twist_vector, TwistVector};

/// `3 Λ(π/3)`. The tests recompute it with two unrelated methods.
pub const V3: f64 = 1.0149416064096536;

pub fn v3() -> f64 {
    V3
}

/// The Lobachevsky function `Λ(θ) = -∫₀^θ log|2 sin u| du`.
///
/// Uses `Λ(θ) = Cl₂(2θ)/2` and the expansion of the Clausen function around
/// zero, which converges geometrically on `|x| ≤ π`.
pub fn lobachevsky(theta: f64) -> f64 {
    // Λ is odd and π-periodic; reduce to [-π/2, π/2].
    let t = theta - PI * (theta / PI).round();
    0.5 * clausen2(2.0 * t)
}

fn clausen2(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let r = (x / (2.0 * PI)).powi(2);
    let mut sum = x - x * x.abs().ln();
    let mut power = x;
    for k in 1..=60u32 {
        power *= r;
        let term = zeta_even(k) / (k as f64 * (2 * k + 1) as f64) * power;
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

/// ζ(2k): closed forms for small k, direct summation once the tail is tiny.
fn zeta_even(k: u32) -> f64 {
    let p2 = PI * PI;
    match k {
        1 => p2 / 6.0,
        2 => p2 * p2 / 90.0,
        3 => p2.powi(3) / 945.0,
        4 => p2.powi(4) / 9450.0,
        5 => p2.powi(5) / 93555.0,
        _ => (1..=40).rev().map(|j| (j as f64).powi(-2 * k as i32)).sum(),
    }
}

/// `a` in the refined bound: 10 when some region has four or more crossings,
/// else 7 when some region has three, else 6.
pub fn a_constant(tv: &TwistVector) -> u32 {
    if tv.g(4) > 0 {
        10
    } else if tv.t3() > 0 {
        7
    } else {
        6
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RefinedBound {
    pub a_used: u32,
    /// `10 g4 + 8 t3 + 6 t2 + 4 t1 - a` before clamping.
    pub raw_units: i64,
    pub units: u64,
    pub clamped: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LackenbyBound {
    /// `10 (t - 1)` before clamping.
    pub raw_units: i64,
    pub units: u64,
    pub clamped: bool,
}

fn clamp(raw: i64) -> (u64, bool) {
    if raw < 0 {
        (0, true)
    } else {
        (raw as u64, false)
    }
}

pub fn refined_bound(tv: &TwistVector) -> RefinedBound {
    let a_used = a_constant(tv);
    let raw_units =
        10 * tv.g(4) as i64 + 8 * tv.t3() as i64 + 6 * tv.t2() as i64 + 4 * tv.t1() as i64
            - a_used as i64;
    let (units, clamped) = clamp(raw_units);
    RefinedBound {
        a_used,
        raw_units,
        units,
        clamped,
    }
}

pub fn lackenby_bound(tv: &TwistVector) -> LackenbyBound {
    let raw_units = 10 * (tv.t() as i64 - 1);
    let (units, clamped) = clamp(raw_units);
    LackenbyBound {
        raw_units,
        units,
        clamped,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub tv: TwistVector,
    pub a_used: u32,
    pub refined_units: u64,
    pub refined_volume: f64,
    pub refined_clamped: bool,
    pub lackenby_units: u64,
    pub lackenby_volume: f64,
    pub lackenby_clamped: bool,
}

impl BoundReport {
    pub fn from_twist_vector(tv: TwistVector) -> Self {
        let refined = refined_bound(&tv);
        let lackenby = lackenby_bound(&tv);
        BoundReport {
            tv,
            a_used: refined.a_used,
            refined_units: refined.units,
            refined_volume: refined.units as f64 * V3,
            refined_clamped: refined.clamped,
            lackenby_units: lackenby.units,
            lackenby_volume: lackenby.units as f64 * V3,
            lackenby_clamped: lackenby.clamped,
        }
    }
}

/// Bounds for a connected, reduced diagram. Nugatory crossings are refused
/// rather than silently removed; see `rewrite::resolve_nugatory`.
pub fn bound_report(diagram: &LinkDiagram) -> Result<BoundReport, BoundError> {
    if !diagram.is_connected() {
        return Err(BoundError::Disconnected(diagram.pieces()));
    }
    let (reduced, nugatory) = diagram.is_reduced();
    if !reduced {
        return Err(BoundError::Unreduced(nugatory));
    }
    let regions = twist_regions(diagram)?;
    Ok(BoundReport::from_twist_vector(twist_vector(&regions)))
}
