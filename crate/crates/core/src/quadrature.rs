//! Gauss–Kronrod quadrature: a fixed composite rule and a globally adaptive
//! integrator.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{domain, Result};

// 15-point Kronrod abscissae on [0, 1] of the symmetric rule (the 7-point
// Gauss nodes are the odd entries), largest first.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub abs_error: f64,
    pub evaluations: usize,
    pub converged: bool,
}

/// One 15-point Kronrod panel on `[a, b]`: (Kronrod estimate, |K15 - G7|).
pub fn gk15<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = WGK[7] * fc;
    let mut g = WG[3] * fc;
    for j in 0..7 {
        let dx = h * XGK[j];
        let s = f(c - dx) + f(c + dx);
        k += WGK[j] * s;
        if j % 2 == 1 {
            g += WG[j / 2] * s;
        }
    }
    (k * h, ((k - g) * h).abs())
}

/// Nodes and weights of the 15-point Kronrod rule mapped to `[a, b]`.
pub fn gk15_nodes(a: f64, b: f64) -> ([f64; 15], [f64; 15]) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut x = [0.0; 15];
    let mut w = [0.0; 15];
    for j in 0..7 {
        x[j] = c - h * XGK[j];
        x[14 - j] = c + h * XGK[j];
        w[j] = h * WGK[j];
        w[14 - j] = h * WGK[j];
    }
    x[7] = c;
    w[7] = h * WGK[7];
    (x, w)
}

/// Nodes and weights of the composite 15-point rule on `panels` equal
/// subintervals of `[a, b]`.
pub fn composite_nodes(a: f64, b: f64, panels: usize) -> (Vec<f64>, Vec<f64>) {
    let mut xs = Vec::with_capacity(15 * panels);
    let mut ws = Vec::with_capacity(15 * panels);
    let h = (b - a) / panels as f64;
    for p in 0..panels {
        let lo = a + h * p as f64;
        let hi = if p + 1 == panels { b } else { lo + h };
        let (x, w) = gk15_nodes(lo, hi);
        xs.extend_from_slice(&x);
        ws.extend_from_slice(&w);
    }
    (xs, ws)
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Globally adaptive Gauss–Kronrod integration of `f` over `[a, b]`.
///
/// The panel with the largest error estimate is bisected until the summed
/// error is below `rel_tol * |value|` or `max_panels` is reached, in which
/// case `converged` is false.
pub fn integrate<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, rel_tol: f64, max_panels: usize) -> Result<Integral> {
    if !(a.is_finite() && b.is_finite() && a < b) {
        return domain(format!("integration interval [{a}, {b}] is empty or not finite"));
    }
    if !(rel_tol > 0.0) {
        return domain(format!("relative tolerance must be positive, got {rel_tol}"));
    }
    let mut heap = BinaryHeap::new();
    // A few initial panels keep the first error estimate honest.
    let initial = 8;
    let h = (b - a) / initial as f64;
    let (mut value, mut error) = (0.0, 0.0);
    for p in 0..initial {
        let lo = a + h * p as f64;
        let hi = if p + 1 == initial { b } else { lo + h };
        let (v, e) = gk15(&mut f, lo, hi);
        value += v;
        error += e;
        heap.push(Panel {
            a: lo,
            b: hi,
            value: v,
            error: e,
        });
    }
    let mut evaluations = 15 * initial;
    while error > rel_tol * value.abs() && heap.len() < max_panels {
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b) {
            heap.push(worst);
            break;
        }
        let (v1, e1) = gk15(&mut f, worst.a, mid);
        let (v2, e2) = gk15(&mut f, mid, worst.b);
        evaluations += 30;
        value += v1 + v2 - worst.value;
        error += e1 + e2 - worst.error;
        heap.push(Panel {
            a: worst.a,
            b: mid,
            value: v1,
            error: e1,
        });
        heap.push(Panel {
            a: mid,
            b: worst.b,
            value: v2,
            error: e2,
        });
    }
    // Re-sum to shed the drift of the running totals.
    let value_sum: f64 = heap.iter().map(|p| p.value).sum();
    let error_sum: f64 = heap.iter().map(|p| p.error).sum();
    Ok(Integral {
        value: value_sum,
        abs_error: error_sum,
        evaluations,
        converged: error_sum <= rel_tol * value_sum.abs(),
    })
}
