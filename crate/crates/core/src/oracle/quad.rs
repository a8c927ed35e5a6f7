//! Global adaptive Gauss–Kronrod (10/21-point) quadrature.
//!
//! Every integral is split into pieces that each live on `u ∈ [0, 1]`;
//! one priority queue over all pieces always bisects the interval with the
//! largest error estimate, so the budget is spent where it matters.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

/// QUADPACK-style error scaling: trusts `|K − G|` less when it is large
/// relative to the integrand's variation and never claims better than
/// `50 ε` times the absolute integral.
fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut e = err.abs();
    if res_asc != 0.0 && e != 0.0 {
        e = res_asc * (200.0 * e / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        e = e.max(50.0 * f64::EPSILON * res_abs);
    }
    e
}

/// One 21-point Kronrod evaluation with its embedded 10-point Gauss estimate.
pub(crate) fn gk21(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre);
    let mut gauss = 0.0;
    let mut kron = fc * WGK[10];
    let mut res_abs = kron.abs();
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let (f1, f2) = (f(centre - dx), f(centre + dx));
        fv1[j] = f1;
        fv2[j] = f2;
        kron += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kron;
    let mut res_asc = WGK[10] * (fc - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let h = half.abs();
    (
        kron * half,
        rescale_error((kron - gauss) * half, res_abs * h, res_asc * h),
    )
}

struct Segment {
    piece: usize,
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct QuadOutcome {
    pub value: f64,
    pub err: f64,
    pub evals: u64,
    pub converged: bool,
}

/// Each piece starts out split this many ways so that a sharply peaked
/// integrand cannot fool a single 21-point rule.
const INITIAL_SEGMENTS: usize = 4;

pub(crate) type Piece<'a> = Box<dyn Fn(f64) -> f64 + 'a>;

/// Integrates the sum of `pieces`, each over `[0, 1]`, until the total error
/// estimate drops below `max(abs_tol, rel_tol·|value|)` or `max_subdivisions`
/// bisections have been spent.
pub(crate) fn integrate_pieces(
    pieces: &[Piece<'_>],
    abs_tol: f64,
    rel_tol: f64,
    max_subdivisions: usize,
) -> QuadOutcome {
    let mut heap = BinaryHeap::new();
    let mut evals = 0u64;
    for (i, g) in pieces.iter().enumerate() {
        for s in 0..INITIAL_SEGMENTS {
            let a = s as f64 / INITIAL_SEGMENTS as f64;
            let b = (s + 1) as f64 / INITIAL_SEGMENTS as f64;
            let (value, err) = gk21(g.as_ref(), a, b);
            evals += 21;
            heap.push(Segment {
                piece: i,
                a,
                b,
                value,
                err,
            });
        }
    }
    let totals = |heap: &BinaryHeap<Segment>| {
        heap.iter()
            .fold((0.0, 0.0), |(v, e), s| (v + s.value, e + s.err))
    };
    let (mut value, mut err) = totals(&heap);
    let mut splits = 0;
    loop {
        let target = abs_tol.max(rel_tol * value.abs());
        let finite = value.is_finite() && err.is_finite();
        if finite && err <= target {
            // the running sums can drift; confirm on a fresh total
            let (v, e) = totals(&heap);
            if e <= abs_tol.max(rel_tol * v.abs()) {
                return QuadOutcome {
                    value: v,
                    err: e,
                    evals,
                    converged: true,
                };
            }
            (value, err) = (v, e);
            continue;
        }
        if splits >= max_subdivisions || !finite {
            let (value, err) = totals(&heap);
            return QuadOutcome {
                value,
                err,
                evals,
                converged: false,
            };
        }
        let worst = heap.pop().expect("at least one segment");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // interval has collapsed to adjacent floats; nothing left to refine
            heap.push(worst);
            let (value, err) = totals(&heap);
            return QuadOutcome {
                value,
                err,
                evals,
                converged: false,
            };
        }
        value -= worst.value;
        err -= worst.err;
        let g = pieces[worst.piece].as_ref();
        for (a, b) in [(worst.a, mid), (mid, worst.b)] {
            let (v, e) = gk21(g, a, b);
            value += v;
            err += e;
            heap.push(Segment {
                piece: worst.piece,
                a,
                b,
                value: v,
                err: e,
            });
        }
        evals += 42;
        splits += 1;
    }
}

/// Where the integrand is being sampled: the abscissa plus its exact
/// distances to the two ends, so integrands never form `1 − t` by
/// cancellation near an endpoint.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Point {
    pub t: f64,
    pub from_lo: f64,
    pub to_hi: f64,
}

/// Integrand `(t − lo)^{alpha_lo} (hi − t)^{alpha_hi} g(t)` with
/// `alpha_* ∈ (−1, 0]`; `g` must be bounded near both ends.
///
/// The algebraic factors are never evaluated near their singular end: a
/// substitution `t − lo = h u^{1/(1+α)}` turns `(t − lo)^α dt` into the
/// constant `h^{1+α} du / (1+α)`.
pub(crate) fn finite_pieces<'a, G>(
    lo: f64,
    hi: f64,
    alpha_lo: f64,
    alpha_hi: f64,
    g: &'a G,
) -> Vec<Piece<'a>>
where
    G: Fn(Point) -> f64 + 'a,
{
    let width = hi - lo;
    if alpha_lo == 0.0 && alpha_hi == 0.0 {
        return vec![Box::new(move |u: f64| {
            let d = width * u;
            width
                * g(Point {
                    t: lo + d,
                    from_lo: d,
                    to_hi: width - d,
                })
        })];
    }
    let h = 0.5 * width;
    let left: Piece<'a> = if alpha_lo < 0.0 {
        let p = 1.0 / (1.0 + alpha_lo);
        let w = p * h.powf(1.0 + alpha_lo);
        Box::new(move |u: f64| {
            let d = h * u.powf(p);
            let to_hi = width - d;
            w * to_hi.powf(alpha_hi)
                * g(Point {
                    t: lo + d,
                    from_lo: d,
                    to_hi,
                })
        })
    } else {
        Box::new(move |u: f64| {
            let d = h * u;
            let to_hi = width - d;
            h * to_hi.powf(alpha_hi)
                * g(Point {
                    t: lo + d,
                    from_lo: d,
                    to_hi,
                })
        })
    };
    let right: Piece<'a> = if alpha_hi < 0.0 {
        let p = 1.0 / (1.0 + alpha_hi);
        let w = p * h.powf(1.0 + alpha_hi);
        Box::new(move |u: f64| {
            let d = h * u.powf(p);
            let from_lo = width - d;
            w * from_lo.powf(alpha_lo)
                * g(Point {
                    t: hi - d,
                    from_lo,
                    to_hi: d,
                })
        })
    } else {
        Box::new(move |u: f64| {
            let d = h * u;
            let from_lo = width - d;
            h * from_lo.powf(alpha_lo)
                * g(Point {
                    t: hi - d,
                    from_lo,
                    to_hi: d,
                })
        })
    };
    vec![left, right]
}

/// Integrand `(t − lo)^{alpha_lo} g(t)` on `[lo, ∞)`. The stretch
/// `[lo, lo + scale]` is handled like a finite integral; the rest is mapped
/// by `t = lo + scale + scale·u/(1 − u)`. `g` must decay faster than `1/t`.
pub(crate) fn semi_infinite_pieces<'a, G>(
    lo: f64,
    scale: f64,
    alpha_lo: f64,
    g: &'a G,
) -> Vec<Piece<'a>>
where
    G: Fn(Point) -> f64 + 'a,
{
    let head: Piece<'a> = if alpha_lo < 0.0 {
        let p = 1.0 / (1.0 + alpha_lo);
        let w = p * scale.powf(1.0 + alpha_lo);
        Box::new(move |u: f64| {
            let d = scale * u.powf(p);
            w * g(Point {
                t: lo + d,
                from_lo: d,
                to_hi: f64::INFINITY,
            })
        })
    } else {
        Box::new(move |u: f64| {
            let d = scale * u;
            scale
                * g(Point {
                    t: lo + d,
                    from_lo: d,
                    to_hi: f64::INFINITY,
                })
        })
    };
    let tail: Piece<'a> = Box::new(move |u: f64| {
        if u >= 1.0 {
            return 0.0;
        }
        let s = 1.0 - u;
        let d = scale + scale * u / s;
        let jac = scale / (s * s);
        let v = g(Point {
            t: lo + d,
            from_lo: d,
            to_hi: f64::INFINITY,
        });
        // far out the integrand has underflowed to zero while the Jacobian
        // has not; keep the product at zero rather than 0·∞
        if v == 0.0 {
            0.0
        } else {
            jac * d.powf(alpha_lo) * v
        }
    });
    vec![head, tail]
}
