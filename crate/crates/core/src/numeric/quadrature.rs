//! Globally adaptive Gauss–Kronrod (10/21 point) quadrature.

#![allow(clippy::excessive_precision)]

use crate::error::{Error, Result};
use crate::scalar::Real;

// Kronrod abscissae on [-1, 1]; odd indices are the 10-point Gauss nodes.
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

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_548_906_434_763,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

// Gauss weights for XGK[1], XGK[3], ..., XGK[9].
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// Settings for [`integrate`].
#[derive(Debug, Clone, Copy)]
pub struct QuadConfig<T> {
    pub rel_tol: T,
    pub abs_tol: T,
    pub max_subdivisions: usize,
}

impl<T: Real> Default for QuadConfig<T> {
    fn default() -> Self {
        Self {
            rel_tol: T::lit(1e-9),
            abs_tol: T::lit(1e-13),
            max_subdivisions: 2000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult<T> {
    pub value: T,
    pub abs_error: T,
    pub subdivisions: usize,
}

#[derive(Debug, Clone, Copy)]
struct Segment<T> {
    a: T,
    b: T,
    value: T,
    error: T,
}

fn gauss_kronrod<T, F>(f: &mut F, a: T, b: T) -> Result<Segment<T>>
where
    T: Real,
    F: FnMut(T) -> Result<T>,
{
    let half = (b - a) / T::lit(2.0);
    let center = a + half;
    let fc = f(center)?;
    let mut kronrod = fc * T::lit(WGK[10]);
    let mut gauss = T::zero();
    for j in 0..10 {
        let dx = half * T::lit(XGK[j]);
        let pair = f(center - dx)? + f(center + dx)?;
        kronrod += T::lit(WGK[j]) * pair;
        if j % 2 == 1 {
            gauss += T::lit(WG[j / 2]) * pair;
        }
    }
    Ok(Segment {
        a,
        b,
        value: kronrod * half,
        error: ((kronrod - gauss) * half).abs(),
    })
}

/// Integrates `f` over `[a, b]`, bisecting the segment with the largest error
/// estimate until the summed estimate meets `max(abs_tol, rel_tol·|I|)`.
///
/// The integrand is fallible so that nested integrals can propagate
/// non-convergence of their inner pass.
pub fn integrate<T, F>(mut f: F, a: T, b: T, cfg: QuadConfig<T>) -> Result<QuadResult<T>>
where
    T: Real,
    F: FnMut(T) -> Result<T>,
{
    if a == b {
        return Ok(QuadResult {
            value: T::zero(),
            abs_error: T::zero(),
            subdivisions: 0,
        });
    }
    let mut segments = vec![gauss_kronrod(&mut f, a, b)?];
    let mut subdivisions = 0;
    loop {
        let total: T = segments.iter().map(|s| s.value).sum();
        let error: T = segments.iter().map(|s| s.error).sum();
        if error <= cfg.abs_tol.max(cfg.rel_tol * total.abs()) {
            return Ok(QuadResult {
                value: total,
                abs_error: error,
                subdivisions,
            });
        }
        if subdivisions >= cfg.max_subdivisions {
            return Err(Error::QuadratureNonConvergence {
                subdivisions,
                estimate: total.as_f64(),
                error: error.as_f64(),
            });
        }
        let worst = segments
            .iter()
            .enumerate()
            .max_by(|x, y| {
                x.1.error
                    .partial_cmp(&y.1.error)
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .map(|(i, _)| i)
            .unwrap_or(0);
        let seg = segments.swap_remove(worst);
        let mid = seg.a + (seg.b - seg.a) / T::lit(2.0);
        if !(mid > seg.a && mid < seg.b) {
            // Segment can no longer be split at this precision.
            return Err(Error::QuadratureNonConvergence {
                subdivisions,
                estimate: total.as_f64(),
                error: error.as_f64(),
            });
        }
        segments.push(gauss_kronrod(&mut f, seg.a, mid)?);
        segments.push(gauss_kronrod(&mut f, mid, seg.b)?);
        subdivisions += 1;
    }
}
