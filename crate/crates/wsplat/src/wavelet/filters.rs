//! Orthogonal filter banks for the four supported wavelet families.
//!
//! Lowpass taps are stored in analysis orientation; the highpass is derived
//! by the quadrature-mirror relation g[k] = (-1)^k h[L-1-k]. haar and coif1
//! are written in closed form; db8 and sym16 were produced by 60-digit
//! spectral factorization of the Daubechies half-band polynomial (minimum
//! phase for db8, least-asymmetric root selection for sym16) and are
//! validated against the bank invariants in the tests below.

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Haar,
    Db8,
    Sym16,
    Coif1,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Haar, Family::Db8, Family::Sym16, Family::Coif1];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Haar => "haar",
            Family::Db8 => "db8",
            Family::Sym16 => "sym16",
            Family::Coif1 => "coif1",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "haar" => Ok(Family::Haar),
            "db8" => Ok(Family::Db8),
            "sym16" => Ok(Family::Sym16),
            "coif1" => Ok(Family::Coif1),
            other => Err(Error::UnknownWaveletFamily(other.to_string())),
        }
    }
}

const DB8_LO: [f64; 16] = [
    0.054415842243104010,
    0.31287159091429997,
    0.67563073629728981,
    0.58535468365420671,
    -0.015829105256349306,
    -0.28401554296154693,
    0.00047248457391328277,
    0.12874742662047846,
    -0.017369301001807546,
    -0.044088253930794752,
    0.013981027917398282,
    0.0087460940474057767,
    -0.0048703529934515743,
    -0.00039174037337694705,
    0.00067544940645056937,
    -0.00011747678412476953,
];

const SYM16_LO: [f64; 32] = [
    -0.000012552906004588058,
    -0.000014963117619171127,
    0.00016355529607213693,
    0.00011797321121147123,
    -0.0012146222998133562,
    -0.00048378332395056960,
    0.0062196659922024441,
    0.0016338240562740315,
    -0.022975152888161057,
    -0.0029934480320456795,
    0.077663527045467999,
    0.046694175567007018,
    -0.10486312987748436,
    0.029993973110139239,
    0.53674413458607424,
    0.74678805036884561,
    0.32310223906429568,
    -0.11888273199735631,
    -0.11673387364225705,
    0.019521339077629102,
    0.0079866060994986495,
    -0.026209649251347586,
    0.00053643402482250642,
    0.014702157960279329,
    0.00085477494949010282,
    -0.0045399165469086605,
    -0.00044494741641888620,
    0.00087456958671309101,
    0.000086511155023266903,
    -0.00010014852036965708,
    -0.0000063879962601987921,
    0.0000053590380462689591,
];

/// Analysis filter pair for one family.
#[derive(Debug, Clone, PartialEq)]
pub struct FilterBank {
    pub family: Family,
    pub lowpass: Vec<f64>,
    pub highpass: Vec<f64>,
}

impl FilterBank {
    pub fn new(family: Family) -> Self {
        let lowpass: Vec<f64> = match family {
            Family::Haar => {
                let h = std::f64::consts::FRAC_1_SQRT_2;
                vec![h, h]
            }
            Family::Db8 => DB8_LO.to_vec(),
            Family::Sym16 => SYM16_LO.to_vec(),
            Family::Coif1 => {
                // Exact: sqrt(2)/32 * [sqrt(7)-3, 1-sqrt(7), 14-2sqrt(7),
                //                      14+2sqrt(7), 5+sqrt(7), 1-sqrt(7)]
                let s7 = 7.0f64.sqrt();
                let c = std::f64::consts::SQRT_2 / 32.0;
                vec![
                    c * (s7 - 3.0),
                    c * (1.0 - s7),
                    c * (14.0 - 2.0 * s7),
                    c * (14.0 + 2.0 * s7),
                    c * (5.0 + s7),
                    c * (1.0 - s7),
                ]
            }
        };
        let len = lowpass.len();
        let highpass = (0..len)
            .map(|k| {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                sign * lowpass[len - 1 - k]
            })
            .collect();
        FilterBank {
            family,
            lowpass,
            highpass,
        }
    }

    pub fn len(&self) -> usize {
        self.lowpass.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lowpass.is_empty()
    }
}

/// Builds the analysis filter bank for a family.
pub fn filter_bank(family: Family) -> FilterBank {
    FilterBank::new(family)
}

/// Name-based variant used by config and CLI paths.
pub fn filter_bank_by_name(name: &str) -> Result<FilterBank> {
    Ok(FilterBank::new(name.parse()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_invariants(fb: &FilterBank) {
        let sqrt2 = std::f64::consts::SQRT_2;
        let sum: f64 = fb.lowpass.iter().sum();
        assert!((sum - sqrt2).abs() < 1e-12, "{}: sum {sum}", fb.family);
        let lo_norm: f64 = fb.lowpass.iter().map(|x| x * x).sum();
        let hi_norm: f64 = fb.highpass.iter().map(|x| x * x).sum();
        assert!((lo_norm - 1.0).abs() < 1e-12, "{}: |h|^2 {lo_norm}", fb.family);
        assert!((hi_norm - 1.0).abs() < 1e-12, "{}: |g|^2 {hi_norm}", fb.family);
        let n = fb.len();
        // even-shift orthogonality, within and across the pair
        for shift in (0..n).step_by(2) {
            let mut hh = 0.0;
            let mut hg = 0.0;
            let mut gh = 0.0;
            for k in shift..n {
                hh += fb.lowpass[k] * fb.lowpass[k - shift];
                hg += fb.lowpass[k] * fb.highpass[k - shift];
                gh += fb.highpass[k] * fb.lowpass[k - shift];
            }
            if shift == 0 {
                assert!((hh - 1.0).abs() < 1e-12, "{}: shift 0", fb.family);
            } else {
                assert!(hh.abs() < 1e-12, "{}: h shift {shift}: {hh}", fb.family);
            }
            assert!(hg.abs() < 1e-12, "{}: h.g shift {shift}: {hg}", fb.family);
            assert!(gh.abs() < 1e-12, "{}: g.h shift {shift}: {gh}", fb.family);
        }
    }

    #[test]
    fn haar_taps() {
        let fb = filter_bank(Family::Haar);
        assert_eq!(fb.len(), 2);
        assert!((fb.lowpass[0] - 0.70710678118654752).abs() < 1e-15);
        assert!((fb.lowpass[1] - 0.70710678118654752).abs() < 1e-15);
        check_invariants(&fb);
    }

    #[test]
    fn coif1_taps() {
        let fb = filter_bank(Family::Coif1);
        assert_eq!(fb.len(), 6);
        check_invariants(&fb);
    }

    #[test]
    fn db8_taps() {
        let fb = filter_bank(Family::Db8);
        assert_eq!(fb.len(), 16);
        check_invariants(&fb);
    }

    #[test]
    fn sym16_taps() {
        let fb = filter_bank(Family::Sym16);
        assert_eq!(fb.len(), 32);
        check_invariants(&fb);
    }

    #[test]
    fn unknown_family_is_rejected_with_name() {
        let err = filter_bank_by_name("db4").unwrap_err();
        assert!(err.to_string().contains("db4"));
    }
}
