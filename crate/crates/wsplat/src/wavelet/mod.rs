//! Discrete wavelet analysis and synthesis in 1D, 2D and 3D.
//!
//! All transforms use periodic boundary extension, which keeps every
//! analysis operator exactly orthogonal: synthesis is the adjoint, energy
//! is preserved and round trips reconstruct to machine precision. Odd
//! extents are padded to even with a periodic wrap sample before analysis
//! and cropped back on synthesis.
//!
//! Analysis convention: `approx[i] = sum_k h[k] * x[(2i + k) mod n]` and
//! likewise for the detail with the highpass. Subband letters are written
//! per axis in X, Y, Z order, so `LLH` is low along X and Y, high along Z.

mod filters;

pub use filters::{filter_bank, filter_bank_by_name, Family, FilterBank};

use crate::error::{Error, Result};
use crate::exec;
use crate::grid::{Grid3, Plane};

/// One analysis pass over an even-length line. Output halves must each hold
/// `n/2` samples.
fn analyze_line(x: &[f64], fb: &FilterBank, approx: &mut [f64], detail: &mut [f64]) {
    let n = x.len();
    debug_assert!(n >= 2 && n % 2 == 0);
    let (lo, hi) = (&fb.lowpass, &fb.highpass);
    for i in 0..n / 2 {
        let mut a = 0.0;
        let mut d = 0.0;
        let base = 2 * i;
        for (k, (&l, &h)) in lo.iter().zip(hi.iter()).enumerate() {
            let xv = x[(base + k) % n];
            a += l * xv;
            d += h * xv;
        }
        approx[i] = a;
        detail[i] = d;
    }
}

/// Adjoint of [`analyze_line`]; scatters both bands back into `out`
/// (which must be zeroed, length `2 * approx.len()`).
fn synthesize_line(approx: &[f64], detail: &[f64], fb: &FilterBank, out: &mut [f64]) {
    let n = out.len();
    debug_assert_eq!(approx.len(), detail.len());
    debug_assert_eq!(n, 2 * approx.len());
    let (lo, hi) = (&fb.lowpass, &fb.highpass);
    for i in 0..approx.len() {
        let (a, d) = (approx[i], detail[i]);
        let base = 2 * i;
        for (k, (&l, &h)) in lo.iter().zip(hi.iter()).enumerate() {
            out[(base + k) % n] += l * a + h * d;
        }
    }
}

fn pad_to_even(x: &[f64]) -> Vec<f64> {
    let mut v = x.to_vec();
    if v.len() % 2 == 1 {
        v.push(x[0]); // periodic wrap
    }
    v
}

/// Single-level 1D analysis. Output bands each hold `ceil(n/2)` samples.
pub fn dwt1d(signal: &[f64], fb: &FilterBank) -> Result<(Vec<f64>, Vec<f64>)> {
    if signal.is_empty() {
        return Err(Error::EmptySignal);
    }
    let padded = pad_to_even(signal);
    let half = padded.len() / 2;
    let mut approx = vec![0.0; half];
    let mut detail = vec![0.0; half];
    analyze_line(&padded, fb, &mut approx, &mut detail);
    Ok((approx, detail))
}

/// Single-level 1D synthesis back to `original_len` samples.
pub fn idwt1d(
    approx: &[f64],
    detail: &[f64],
    fb: &FilterBank,
    original_len: usize,
) -> Result<Vec<f64>> {
    if approx.len() != detail.len() {
        return Err(Error::BandLengthMismatch {
            approx: approx.len(),
            detail: detail.len(),
        });
    }
    if approx.is_empty() {
        return Err(Error::EmptySignal);
    }
    if original_len.div_ceil(2) != approx.len() {
        return Err(Error::InvalidArgument(format!(
            "band length {} cannot synthesize {} samples",
            approx.len(),
            original_len
        )));
    }
    let mut out = vec![0.0; 2 * approx.len()];
    synthesize_line(approx, detail, fb, &mut out);
    out.truncate(original_len);
    Ok(out)
}

// ---------------------------------------------------------------------------
// 2D
// ---------------------------------------------------------------------------

/// Detail triple of one 2D level. `h` is high along X (columns of detail from
/// the row pass), `v` high along Y, `d` high along both.
#[derive(Debug, Clone)]
pub struct DetailBands2d {
    pub h: Plane,
    pub v: Plane,
    pub d: Plane,
}

/// Multi-level 2D decomposition: the final approximation plus per-level
/// detail triples, finest level first.
#[derive(Debug, Clone)]
pub struct Dwt2d {
    pub approx: Plane,
    pub levels: Vec<DetailBands2d>,
    pub source_width: usize,
    pub source_height: usize,
}

/// One analysis pass along X for every row. Returns (low, high), each
/// `ceil(w/2) x h`.
fn rows_pass(p: &Plane, fb: &FilterBank) -> (Plane, Plane) {
    let padded_w = p.width + p.width % 2;
    let half = padded_w / 2;
    let mut low = Plane::zeros(half, p.height);
    let mut high = Plane::zeros(half, p.height);
    let src: Vec<&[f64]> = p.data.chunks(p.width).collect();
    exec::for_each_chunk_pair_mut(
        &mut low.data,
        &mut high.data,
        half,
        half,
        |y, lo_row, hi_row| {
            if p.width % 2 == 0 {
                analyze_line(src[y], fb, lo_row, hi_row);
            } else {
                let line = pad_to_even(src[y]);
                analyze_line(&line, fb, lo_row, hi_row);
            }
        },
    );
    (low, high)
}

fn transpose(p: &Plane) -> Plane {
    let mut t = Plane::zeros(p.height, p.width);
    for y in 0..p.height {
        for x in 0..p.width {
            t.set(y, x, p.get(x, y));
        }
    }
    t
}

/// One 2D analysis level: row pass then column pass.
fn dwt2d_level(p: &Plane, fb: &FilterBank) -> (Plane, DetailBands2d) {
    let (lx, hx) = rows_pass(p, fb);
    let (ll, lh) = {
        let t = transpose(&lx);
        let (a, d) = rows_pass(&t, fb);
        (transpose(&a), transpose(&d))
    };
    let (hl, hh) = {
        let t = transpose(&hx);
        let (a, d) = rows_pass(&t, fb);
        (transpose(&a), transpose(&d))
    };
    (
        ll,
        DetailBands2d {
            h: hl,
            v: lh,
            d: hh,
        },
    )
}

fn rows_unpass(low: &Plane, high: &Plane, fb: &FilterBank, out_w: usize) -> Plane {
    assert_eq!((low.width, low.height), (high.width, high.height));
    let full_w = 2 * low.width;
    let mut out = Plane::zeros(full_w, low.height);
    let lo_rows: Vec<&[f64]> = low.data.chunks(low.width).collect();
    let hi_rows: Vec<&[f64]> = high.data.chunks(high.width).collect();
    exec::for_each_chunk_mut(&mut out.data, full_w, |y, row| {
        synthesize_line(lo_rows[y], hi_rows[y], fb, row);
    });
    if out_w < full_w {
        let mut cropped = Plane::zeros(out_w, low.height);
        for y in 0..low.height {
            for x in 0..out_w {
                cropped.set(x, y, out.get(x, y));
            }
        }
        return cropped;
    }
    out
}

fn idwt2d_level(
    approx: &Plane,
    bands: &DetailBands2d,
    fb: &FilterBank,
    out_w: usize,
    out_h: usize,
) -> Plane {
    let lx = {
        let a = transpose(approx);
        let d = transpose(&bands.v);
        transpose(&rows_unpass(&a, &d, fb, out_h))
    };
    let hx = {
        let a = transpose(&bands.h);
        let d = transpose(&bands.d);
        transpose(&rows_unpass(&a, &d, fb, out_h))
    };
    rows_unpass(&lx, &hx, fb, out_w)
}

/// Multi-level separable 2D analysis.
pub fn dwt2d(image: &Plane, fb: &FilterBank, levels: usize) -> Result<Dwt2d> {
    if image.width == 0 || image.height == 0 {
        return Err(Error::EmptySignal);
    }
    if levels == 0 {
        return Err(Error::InvalidArgument("levels must be >= 1".into()));
    }
    let min_extent = image.width.min(image.height);
    if (1usize << levels) > min_extent {
        return Err(Error::TooManyLevels {
            levels,
            min_extent,
        });
    }
    let mut approx = image.clone();
    let mut detail = Vec::with_capacity(levels);
    for _ in 0..levels {
        let (a, bands) = dwt2d_level(&approx, fb);
        detail.push(bands);
        approx = a;
    }
    Ok(Dwt2d {
        approx,
        levels: detail,
        source_width: image.width,
        source_height: image.height,
    })
}

/// Inverse of [`dwt2d`].
pub fn idwt2d(dec: &Dwt2d, fb: &FilterBank) -> Result<Plane> {
    // Recompute per-level target dims by ceil-halving from the source.
    let mut dims = vec![(dec.source_width, dec.source_height)];
    for _ in 0..dec.levels.len() {
        let (w, h) = *dims.last().unwrap();
        dims.push((w.div_ceil(2), h.div_ceil(2)));
    }
    let mut cur = dec.approx.clone();
    for (lvl, bands) in dec.levels.iter().enumerate().rev() {
        let (out_w, out_h) = dims[lvl];
        let expect = dims[lvl + 1];
        if (bands.h.width, bands.h.height) != expect || (cur.width, cur.height) != expect {
            return Err(Error::BandShapeMismatch {
                band: "2d level",
                expected: vec![expect.0, expect.1],
                got: vec![bands.h.width, bands.h.height],
            });
        }
        cur = idwt2d_level(&cur, bands, fb, out_w, out_h);
    }
    Ok(cur)
}

// ---------------------------------------------------------------------------
// 3D
// ---------------------------------------------------------------------------

pub const BAND_LABELS: [&str; 8] = ["LLL", "LLH", "LHL", "LHH", "HLL", "HLH", "HHL", "HHH"];

/// Band index for (x_high, y_high, z_high) flags; letters read X, Y, Z.
pub fn band_index(x_high: bool, y_high: bool, z_high: bool) -> usize {
    (x_high as usize) * 4 + (y_high as usize) * 2 + (z_high as usize)
}

/// Single-level 3D subband set. `bands[0]` is LLL, indexed per
/// [`band_index`]; each band extent is the ceil-half of the source extent.
#[derive(Debug, Clone)]
pub struct SubbandSet3d {
    pub bands: Vec<Grid3>,
    pub level: u32,
    pub source_dims: [usize; 3],
}

impl SubbandSet3d {
    pub fn band(&self, label: &str) -> &Grid3 {
        let i = BAND_LABELS.iter().position(|l| *l == label).expect("band label");
        &self.bands[i]
    }

    /// Copy with every band not in `keep` zeroed.
    pub fn masked(&self, keep: &[usize]) -> SubbandSet3d {
        let bands = self
            .bands
            .iter()
            .enumerate()
            .map(|(i, b)| {
                if keep.contains(&i) {
                    b.clone()
                } else {
                    Grid3::zeros(b.dims)
                }
            })
            .collect();
        SubbandSet3d {
            bands,
            level: self.level,
            source_dims: self.source_dims,
        }
    }
}

/// Splits a grid along one axis into (low, high) halves. `axis` is 0/1/2 for
/// x/y/z. The split axis extent is ceil-halved.
fn split_axis(g: &Grid3, axis: usize, fb: &FilterBank) -> (Grid3, Grid3) {
    let n = g.dims[axis];
    let padded = n + n % 2;
    let half = padded / 2;
    let mut out_dims = g.dims;
    out_dims[axis] = half;
    let mut low = Grid3::zeros(out_dims);
    let mut high = Grid3::zeros(out_dims);

    let lines = g.len() / n;
    let line_results: Vec<(Vec<f64>, Vec<f64>)> = exec::map_indexed(lines, |li| {
        let mut buf = vec![0.0; n];
        gather_line(g, axis, li, &mut buf);
        let padded_buf = pad_to_even(&buf);
        let mut a = vec![0.0; half];
        let mut d = vec![0.0; half];
        analyze_line(&padded_buf, fb, &mut a, &mut d);
        (a, d)
    });
    for (li, (a, d)) in line_results.iter().enumerate() {
        scatter_line(&mut low, axis, li, a);
        scatter_line(&mut high, axis, li, d);
    }
    (low, high)
}

/// Merges (low, high) halves back along `axis` to `out_n` samples.
fn merge_axis(low: &Grid3, high: &Grid3, axis: usize, fb: &FilterBank, out_n: usize) -> Grid3 {
    assert_eq!(low.dims, high.dims);
    let half = low.dims[axis];
    let mut out_dims = low.dims;
    out_dims[axis] = out_n;
    let mut out = Grid3::zeros(out_dims);
    let lines = low.len() / half;
    let line_results: Vec<Vec<f64>> = exec::map_indexed(lines, |li| {
        let mut a = vec![0.0; half];
        let mut d = vec![0.0; half];
        gather_line(low, axis, li, &mut a);
        gather_line(high, axis, li, &mut d);
        let mut full = vec![0.0; 2 * half];
        synthesize_line(&a, &d, fb, &mut full);
        full.truncate(out_n);
        full
    });
    for (li, line) in line_results.iter().enumerate() {
        scatter_line(&mut out, axis, li, line);
    }
    out
}

/// Gathers line `li` along `axis` into `buf`. Lines are indexed by the two
/// off-axis coordinates in x-fastest order.
fn gather_line(g: &Grid3, axis: usize, li: usize, buf: &mut [f64]) {
    let [nx, ny, _nz] = g.dims;
    match axis {
        0 => {
            let start = li * nx;
            buf.copy_from_slice(&g.data[start..start + nx]);
        }
        1 => {
            let (x, z) = (li % nx, li / nx);
            for (y, b) in buf.iter_mut().enumerate() {
                *b = g.data[x + nx * (y + ny * z)];
            }
        }
        2 => {
            let (x, y) = (li % nx, li / nx);
            for (z, b) in buf.iter_mut().enumerate() {
                *b = g.data[x + nx * (y + ny * z)];
            }
        }
        _ => unreachable!(),
    }
}

fn scatter_line(g: &mut Grid3, axis: usize, li: usize, line: &[f64]) {
    let [nx, ny, _nz] = g.dims;
    match axis {
        0 => {
            let start = li * nx;
            g.data[start..start + nx].copy_from_slice(line);
        }
        1 => {
            let (x, z) = (li % nx, li / nx);
            for (y, &v) in line.iter().enumerate() {
                g.data[x + nx * (y + ny * z)] = v;
            }
        }
        2 => {
            let (x, y) = (li % nx, li / nx);
            for (z, &v) in line.iter().enumerate() {
                g.data[x + nx * (y + ny * z)] = v;
            }
        }
        _ => unreachable!(),
    }
}

/// Single-level separable 3D analysis into 8 subbands.
pub fn dwt3d(grid: &Grid3, fb: &FilterBank) -> Result<SubbandSet3d> {
    if grid.is_empty() {
        return Err(Error::EmptySignal);
    }
    let (lx, hx) = split_axis(grid, 0, fb);
    let mut after_y = Vec::with_capacity(4);
    for g in [&lx, &hx] {
        let (l, h) = split_axis(g, 1, fb);
        after_y.push(l);
        after_y.push(h);
    }
    let mut bands = Vec::with_capacity(8);
    for g in &after_y {
        let (l, h) = split_axis(g, 2, fb);
        bands.push(l);
        bands.push(h);
    }
    Ok(SubbandSet3d {
        bands,
        level: 1,
        source_dims: grid.dims,
    })
}

/// Inverse of [`dwt3d`].
pub fn idwt3d(set: &SubbandSet3d, fb: &FilterBank) -> Result<Grid3> {
    if set.bands.len() != 8 {
        return Err(Error::BandShapeMismatch {
            band: "band count",
            expected: vec![8],
            got: vec![set.bands.len()],
        });
    }
    let expect = [
        set.source_dims[0].div_ceil(2),
        set.source_dims[1].div_ceil(2),
        set.source_dims[2].div_ceil(2),
    ];
    for (i, b) in set.bands.iter().enumerate() {
        if b.dims != expect {
            return Err(Error::BandShapeMismatch {
                band: BAND_LABELS[i],
                expected: expect.to_vec(),
                got: b.dims.to_vec(),
            });
        }
    }
    // Merge z, then y, then x — reverse of analysis. Intermediate extents
    // are the padded (even) sizes; the final merge crops to the source.
    let pad = [
        set.source_dims[0] + set.source_dims[0] % 2,
        set.source_dims[1] + set.source_dims[1] % 2,
        set.source_dims[2] + set.source_dims[2] % 2,
    ];
    let mut quads = Vec::with_capacity(4);
    for pair in set.bands.chunks(2) {
        quads.push(merge_axis(&pair[0], &pair[1], 2, fb, set.source_dims[2].min(pad[2])));
    }
    let mut halves = Vec::with_capacity(2);
    for pair in quads.chunks(2) {
        halves.push(merge_axis(&pair[0], &pair[1], 1, fb, set.source_dims[1]));
    }
    Ok(merge_axis(&halves[0], &halves[1], 0, fb, set.source_dims[0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rand_vec(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
        (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()
    }

    #[test]
    fn haar_constant_signal_has_zero_detail() {
        let fb = filter_bank(Family::Haar);
        let (a, d) = dwt1d(&[1.0, 1.0, 1.0, 1.0], &fb).unwrap();
        let s2 = std::f64::consts::SQRT_2;
        assert!((a[0] - s2).abs() < 1e-12 && (a[1] - s2).abs() < 1e-12);
        assert!(d[0].abs() < 1e-12 && d[1].abs() < 1e-12);
    }

    #[test]
    fn haar_pure_oscillation_has_zero_approx() {
        let fb = filter_bank(Family::Haar);
        let (a, d) = dwt1d(&[1.0, -1.0], &fb).unwrap();
        assert!(a[0].abs() < 1e-12);
        assert!((d[0] - std::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn haar_inverse_of_constant() {
        let fb = filter_bank(Family::Haar);
        let s2 = std::f64::consts::SQRT_2;
        let x = idwt1d(&[s2, s2], &[0.0, 0.0], &fb, 4).unwrap();
        for v in x {
            assert!((v - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn zero_bands_give_zero_signal() {
        for family in Family::ALL {
            let fb = filter_bank(family);
            let x = idwt1d(&[0.0; 8], &[0.0; 8], &fb, 16).unwrap();
            assert!(x.iter().all(|v| *v == 0.0));
        }
    }

    #[test]
    fn empty_signal_rejected() {
        let fb = filter_bank(Family::Haar);
        assert!(matches!(dwt1d(&[], &fb), Err(Error::EmptySignal)));
    }

    #[test]
    fn mismatched_band_lengths_rejected() {
        let fb = filter_bank(Family::Haar);
        let err = idwt1d(&[1.0, 2.0], &[0.0], &fb, 4).unwrap_err();
        assert!(matches!(err, Error::BandLengthMismatch { approx: 2, detail: 1 }));
    }

    #[test]
    fn coif1_linearity() {
        let fb = filter_bank(Family::Coif1);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let f = rand_vec(&mut rng, 64);
        let g = rand_vec(&mut rng, 64);
        let sum: Vec<f64> = f.iter().zip(&g).map(|(a, b)| a + b).collect();
        let (af, df) = dwt1d(&f, &fb).unwrap();
        let (ag, dg) = dwt1d(&g, &fb).unwrap();
        let (asum, dsum) = dwt1d(&sum, &fb).unwrap();
        for i in 0..asum.len() {
            assert!((asum[i] - af[i] - ag[i]).abs() < 1e-12);
            assert!((dsum[i] - df[i] - dg[i]).abs() < 1e-12);
        }
    }

    #[test]
    fn roundtrip_1d_all_families_including_odd_and_short() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for family in Family::ALL {
            let fb = filter_bank(family);
            for n in [2usize, 3, 5, 8, 17, 64, 1000] {
                let x = rand_vec(&mut rng, n);
                let (a, d) = dwt1d(&x, &fb).unwrap();
                assert_eq!(a.len(), n.div_ceil(2));
                let y = idwt1d(&a, &d, &fb, n).unwrap();
                let err = x
                    .iter()
                    .zip(&y)
                    .map(|(p, q)| (p - q).abs())
                    .fold(0.0, f64::max);
                assert!(err <= 1e-9, "{family} n={n}: {err}");
            }
        }
    }

    #[test]
    fn energy_preserved_on_even_lengths() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for family in Family::ALL {
            let fb = filter_bank(family);
            let x = rand_vec(&mut rng, 128);
            let (a, d) = dwt1d(&x, &fb).unwrap();
            let ex: f64 = x.iter().map(|v| v * v).sum();
            let ec: f64 = a.iter().chain(&d).map(|v| v * v).sum();
            assert!(((ex - ec) / ex).abs() < 1e-9, "{family}");
        }
    }

    #[test]
    fn dwt2d_constant_image_haar() {
        let fb = filter_bank(Family::Haar);
        let img = Plane::from_data(4, 4, vec![1.0; 16]);
        let dec = dwt2d(&img, &fb, 1).unwrap();
        assert_eq!((dec.approx.width, dec.approx.height), (2, 2));
        for v in &dec.approx.data {
            assert!((v - 2.0).abs() < 1e-12);
        }
        let b = &dec.levels[0];
        for p in [&b.h, &b.v, &b.d] {
            assert!(p.data.iter().all(|v| v.abs() < 1e-12));
        }
    }

    #[test]
    fn dwt2d_deterministic() {
        let fb = filter_bank(Family::Coif1);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let img = Plane::from_data(16, 12, rand_vec(&mut rng, 192));
        let a = dwt2d(&img, &fb, 2).unwrap();
        let b = dwt2d(&img, &fb, 2).unwrap();
        assert_eq!(a.approx.data, b.approx.data);
        assert_eq!(a.levels[1].d.data, b.levels[1].d.data);
    }

    #[test]
    fn dwt2d_level_guard() {
        let fb = filter_bank(Family::Haar);
        let img = Plane::zeros(8, 8);
        assert!(dwt2d(&img, &fb, 3).is_ok());
        assert!(matches!(
            dwt2d(&img, &fb, 4),
            Err(Error::TooManyLevels { .. })
        ));
    }

    #[test]
    fn roundtrip_2d_all_families() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for family in Family::ALL {
            let fb = filter_bank(family);
            for (w, h, levels) in [(32, 32, 1), (32, 32, 3), (17, 9, 2), (31, 64, 1)] {
                let img = Plane::from_data(w, h, rand_vec(&mut rng, w * h));
                let dec = dwt2d(&img, &fb, levels).unwrap();
                let rec = idwt2d(&dec, &fb).unwrap();
                let err = img.linf_diff(&rec);
                assert!(err <= 1e-9, "{family} {w}x{h} L{levels}: {err}");
            }
        }
    }

    #[test]
    fn dwt3d_constant_grid_haar() {
        let fb = filter_bank(Family::Haar);
        let c = 0.7;
        let g = Grid3::from_data([4, 4, 4], vec![c; 64]);
        let set = dwt3d(&g, &fb).unwrap();
        let expect = 2.0 * std::f64::consts::SQRT_2 * c;
        for v in &set.bands[0].data {
            assert!((v - expect).abs() < 1e-12);
        }
        for b in &set.bands[1..] {
            assert!(b.data.iter().all(|v| v.abs() < 1e-12));
        }
    }

    #[test]
    fn dwt3d_zero_grid() {
        let fb = filter_bank(Family::Db8);
        let set = dwt3d(&Grid3::zeros([6, 4, 8]), &fb).unwrap();
        for b in &set.bands {
            assert!(b.data.iter().all(|v| *v == 0.0));
        }
    }

    #[test]
    fn subband_shapes_are_ceil_half() {
        let fb = filter_bank(Family::Coif1);
        let set = dwt3d(&Grid3::zeros([5, 8, 3]), &fb).unwrap();
        for b in &set.bands {
            assert_eq!(b.dims, [3, 4, 2]);
        }
    }

    #[test]
    fn roundtrip_3d_all_families() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for family in Family::ALL {
            let fb = filter_bank(family);
            for dims in [[16, 16, 16], [8, 6, 10], [7, 5, 9]] {
                let n = dims[0] * dims[1] * dims[2];
                let g = Grid3::from_data(dims, rand_vec(&mut rng, n));
                let set = dwt3d(&g, &fb).unwrap();
                let rec = idwt3d(&set, &fb).unwrap();
                let err = g.linf_diff(&rec);
                assert!(err <= 1e-9, "{family} {dims:?}: {err}");
            }
        }
    }

    #[test]
    fn low_plus_high_synthesis_additivity() {
        let fb = filter_bank(Family::Coif1);
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let g = Grid3::from_data([16, 16, 16], rand_vec(&mut rng, 4096));
        let set = dwt3d(&g, &fb).unwrap();
        let low = idwt3d(&set.masked(&[0]), &fb).unwrap();
        let high = idwt3d(&set.masked(&[1, 2, 3, 4, 5, 6, 7]), &fb).unwrap();
        let sum = low.add(&high);
        assert!(sum.linf_diff(&g) <= 1e-9);
    }

    #[test]
    fn idwt3d_band_shape_mismatch_rejected() {
        let fb = filter_bank(Family::Haar);
        let g = Grid3::zeros([4, 4, 4]);
        let mut set = dwt3d(&g, &fb).unwrap();
        set.bands[3] = Grid3::zeros([4, 2, 2]);
        assert!(matches!(
            idwt3d(&set, &fb),
            Err(Error::BandShapeMismatch { .. })
        ));
    }
}
