//! Verification reports: build a code family, measure it by full hyperplane
//! enumeration, and compare every measured quantity against the closed form
//! claimed for that family. All comparisons are exact.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bounds::{griesmer_holds, lambda_k, s_k, ExactRatio};
use crate::code::{
    AdditiveLineCode, CodeParameters, HyperplaneLoads, Strategy, WeightDistribution,
};
use crate::constructions::{
    all_lines_code, cover_multiplicity, spread_code, three_cover_code, variant_code,
};
use crate::error::{Error, Result};
use crate::geometry::{fano_subplane, line_count, Hyperplane};
use crate::matrix::{brute_force_min_weight, concatenated_binary_generator};

/// Largest ambient dimension for which the brute-force oracle runs by default.
pub const DEFAULT_ORACLE_LIMIT: u32 = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    AllLines,
    Spread,
    ThreeCover,
    Variant,
    Fano,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::AllLines,
        Family::Spread,
        Family::ThreeCover,
        Family::Variant,
        Family::Fano,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::AllLines => "all-lines",
            Family::Spread => "spread",
            Family::ThreeCover => "three-cover",
            Family::Variant => "variant",
            Family::Fano => "fano",
        }
    }

    /// Name of the size parameter: `l`, `m`, or none for the Fano plane.
    pub fn size_name(self) -> Option<&'static str> {
        match self {
            Family::Variant => Some("m"),
            Family::Fano => None,
            _ => Some("l"),
        }
    }

    /// Size parameters the library builds.
    pub fn supported_sizes(self) -> Vec<u32> {
        match self {
            Family::AllLines => (3..=12).collect(),
            Family::Spread => vec![4, 6, 8, 10, 12],
            Family::ThreeCover => vec![3, 5, 7, 9, 11],
            Family::Variant => (2..=5).collect(),
            Family::Fano => vec![3],
        }
    }

    fn size(self, size: Option<u32>) -> Result<u32> {
        match (self, size) {
            (Family::Fano, None) => Ok(3),
            (_, Some(s)) => Ok(s),
            (f, None) => Err(Error::ParameterOutOfRange {
                name: f.size_name().unwrap_or("size"),
                value: 0,
                min: 1,
                max: u64::MAX,
            }),
        }
    }

    /// Ambient dimension of the code built from `size`.
    pub fn ambient_dim(self, size: u32) -> u32 {
        match self {
            Family::Variant => 2 * size + 1,
            _ => size,
        }
    }

    pub fn build(self, size: Option<u32>) -> Result<AdditiveLineCode> {
        let s = self.size(size)?;
        match self {
            Family::AllLines => all_lines_code(s),
            Family::Spread => spread_code(s),
            Family::ThreeCover => three_cover_code(s),
            Family::Variant => variant_code(s),
            Family::Fano => {
                if s != 3 {
                    return Err(Error::DimensionOutOfRange {
                        l: s,
                        min: 3,
                        max: 3,
                    });
                }
                all_lines_code(3)
            }
        }
    }

    /// Closed-form parameters of the family member.
    pub fn claimed(self, size: Option<u32>) -> Result<CodeParameters> {
        let s = self.size(size)?;
        let l = self.ambient_dim(s);
        let q = 1u64 << l;
        Ok(match self {
            Family::AllLines | Family::Fano => {
                let n = line_count(l)?;
                CodeParameters::new(n, l, n - line_count(l - 1)?)
            }
            Family::Spread => {
                let n = (q - 1) / 3;
                CodeParameters::new(n, l, n - s_k(l)?)
            }
            Family::ThreeCover => CodeParameters::new(q - 1, l, q - 1 - s_k(l)?),
            Family::Variant => CodeParameters::new((q + 1) / 3, l, 1 << (2 * s - 1)),
        })
    }

    fn claimed_weights(self, claimed: &CodeParameters) -> BTreeSet<u64> {
        match self {
            Family::Variant => BTreeSet::from([claimed.d, claimed.d + 1]),
            _ => BTreeSet::from([claimed.d]),
        }
    }

    /// Cover multiplicity the family is claimed to have.
    fn cover_m(self, l: u32) -> Option<u64> {
        match self {
            Family::AllLines => Some((1 << (l - 1)) - 1),
            Family::Spread => Some(1),
            Family::ThreeCover | Family::Fano => Some(3),
            Family::Variant => None,
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
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub strategy: Strategy,
    /// Run the brute-force oracle when the ambient dimension is at most this.
    pub oracle_limit: u32,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            strategy: Strategy::default(),
            oracle_limit: DEFAULT_ORACLE_LIMIT,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoverCheck {
    pub m: u64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub subject: String,
    pub claimed: Option<CodeParameters>,
    pub measured: CodeParameters,
    pub claimed_weight_set: Option<BTreeSet<u64>>,
    pub weight_set: BTreeSet<u64>,
    pub weight_distribution: WeightDistribution,
    pub is_cover: Option<CoverCheck>,
    /// Per-hyperplane counting identity of the construction, when it has one.
    pub hyperplane_identity: Option<bool>,
    /// `n / s`; absent when `s = 0`.
    pub ratio: Option<ExactRatio>,
    pub lambda: Option<ExactRatio>,
    pub lambda_match: Option<bool>,
    pub griesmer_concatenated: bool,
    pub oracle_min_weight: Option<u64>,
    pub mismatches: Vec<String>,
    pub pass: bool,
}

impl VerificationReport {
    fn finish(mut self) -> Self {
        if let Some(c) = self.claimed {
            if c != self.measured {
                self.mismatches.push(format!(
                    "parameters: claimed {c:?}, measured {:?}",
                    self.measured
                ));
            }
        }
        if let Some(w) = &self.claimed_weight_set {
            if *w != self.weight_set {
                self.mismatches.push(format!(
                    "weight set: claimed {w:?}, measured {:?}",
                    self.weight_set
                ));
            }
        }
        if let Some(c) = self.is_cover {
            if !c.holds {
                self.mismatches.push(format!("not a {}-cover", c.m));
            }
        }
        if self.hyperplane_identity == Some(false) {
            self.mismatches
                .push("hyperplane counting identity fails".into());
        }
        if self.lambda_match == Some(false) {
            self.mismatches.push(format!(
                "ratio {:?} differs from lambda {:?}",
                self.ratio.map(|r| r.to_string()),
                self.lambda.map(|r| r.to_string())
            ));
        }
        if !self.griesmer_concatenated {
            self.mismatches
                .push("concatenated code violates the Griesmer bound".into());
        }
        if let Some(w) = self.oracle_min_weight {
            if w != 2 * self.measured.d {
                self.mismatches.push(format!(
                    "oracle: binary minimum weight {w}, expected {}",
                    2 * self.measured.d
                ));
            }
        }
        self.pass = self.mismatches.is_empty();
        self
    }
}

fn oracle(code: &AdditiveLineCode, opts: &VerifyOptions) -> Result<Option<u64>> {
    if code.dim() > opts.oracle_limit {
        return Ok(None);
    }
    brute_force_min_weight(
        &concatenated_binary_generator(code),
        opts.oracle_limit as usize,
    )
    .map(Some)
}

/// Measurements shared by every kind of report.
fn base_report(
    subject: String,
    code: &AdditiveLineCode,
    loads: &HyperplaneLoads,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    let measured = loads.parameters();
    let dist = loads.weight_distribution();
    let ratio = (measured.s > 0).then(|| ExactRatio::new(measured.n, measured.s));
    let (n2, k2, d2) = measured.concatenated();
    Ok(VerificationReport {
        subject,
        claimed: None,
        measured,
        claimed_weight_set: None,
        weight_set: dist.weights(),
        weight_distribution: dist,
        is_cover: None,
        hyperplane_identity: None,
        ratio,
        lambda: lambda_k(code.dim()).ok(),
        lambda_match: None,
        griesmer_concatenated: griesmer_holds(n2, k2, d2),
        oracle_min_weight: oracle(code, opts)?,
        mismatches: Vec::new(),
        pass: false,
    })
}

/// Builds `family` at `size` and checks it against its claimed properties.
pub fn verify_construction(
    family: Family,
    size: Option<u32>,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    let code = family.build(size)?;
    let claimed = family.claimed(size)?;
    let l = code.dim();
    let loads = HyperplaneLoads::compute(&code, opts.strategy);
    let subject = match family.size_name() {
        Some(name) => format!("{family} {name}={}", size.unwrap_or(3)),
        None => family.to_string(),
    };
    let mut report = base_report(subject, &code, &loads, opts)?;
    report.claimed = Some(claimed);
    report.claimed_weight_set = Some(family.claimed_weights(&claimed));

    let points_per_hyperplane = (1u64 << (l - 1)) - 1;
    if let Some(m) = family.cover_m(l) {
        let holds = cover_multiplicity(&code).values().all(|&c| c == m);
        report.is_cover = Some(CoverCheck { m, holds });
        // every codeline outside H meets H in exactly one point
        report.hyperplane_identity = Some(
            loads
                .profiles()
                .all(|p| 3 * p.inside + p.outside == m * points_per_hyperplane),
        );
        report.lambda_match = Some(report.ratio.is_some() && report.ratio == report.lambda);
    } else {
        let e = fano_subplane(l)?;
        let q = 1u64 << (l - 2);
        let through_e = (q + 1) / 3;
        let x = (q - 2) / 3;
        report.hyperplane_identity = Some(loads.profiles().all(|p| {
            if e.is_contained_in(Hyperplane::new(p.dual_mask, l).unwrap()) {
                p.inside == through_e
            } else {
                p.inside == x || p.inside == x + 1
            }
        }));
    }
    Ok(report.finish())
}

/// Measures an arbitrary code: no claims, only the bound and oracle checks.
pub fn verify_code(code: &AdditiveLineCode, opts: &VerifyOptions) -> Result<VerificationReport> {
    let loads = HyperplaneLoads::compute(code, opts.strategy);
    let subject = format!(
        "code in PG({}, 2) with {} codelines",
        code.dim() - 1,
        code.len()
    );
    Ok(base_report(subject, code, &loads, opts)?.finish())
}

/// True iff twice the geometric minimum distance equals the minimum weight of
/// the concatenated binary code found by brute force.
pub fn cross_check_oracle(
    code: &AdditiveLineCode,
    oracle_limit: u32,
    strategy: Strategy,
) -> Result<bool> {
    if code.dim() > oracle_limit {
        return Err(Error::OracleRefused {
            rows: code.dim() as usize,
            limit: oracle_limit as usize,
        });
    }
    let d = HyperplaneLoads::compute(code, strategy).parameters().d;
    let w = brute_force_min_weight(&concatenated_binary_generator(code), oracle_limit as usize)?;
    Ok(2 * d == w)
}

/// Sums `copies` copies of `code` and checks that every hyperplane load,
/// hence `n`, `d`, `s` and the weight set, scales by `copies`.
pub fn sum_construction_check(
    code: &AdditiveLineCode,
    copies: u32,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    if copies < 2 {
        return Err(Error::ParameterOutOfRange {
            name: "copies",
            value: copies as u64,
            min: 2,
            max: u32::MAX as u64,
        });
    }
    let c = copies as u64;
    let base = HyperplaneLoads::compute(code, opts.strategy);
    let base_params = base.parameters();
    let summed = code.repeated(copies)?;
    let loads = HyperplaneLoads::compute(&summed, opts.strategy);
    let subject = format!("{copies} copies of {base_params}");
    let mut report = base_report(subject, &summed, &loads, opts)?;
    report.claimed = Some(CodeParameters {
        n: c * base_params.n,
        two_k: base_params.two_k,
        d: c * base_params.d,
        s: c * base_params.s,
    });
    report.claimed_weight_set = Some(
        base.weight_distribution()
            .weights()
            .iter()
            .map(|w| c * w)
            .collect(),
    );
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert_eq!(
            "nope".parse::<Family>(),
            Err(Error::UnknownFamily("nope".into()))
        );
    }

    #[test]
    fn claimed_parameters() {
        let p = |f: Family, s| {
            let c = f.claimed(s).unwrap();
            (c.n, c.two_k, c.d, c.s)
        };
        assert_eq!(p(Family::Fano, None), (7, 3, 6, 1));
        assert_eq!(p(Family::AllLines, Some(5)), (155, 5, 120, 35));
        assert_eq!(p(Family::Spread, Some(8)), (85, 8, 64, 21));
        assert_eq!(p(Family::ThreeCover, Some(9)), (511, 9, 384, 127));
        assert_eq!(p(Family::Variant, Some(4)), (171, 9, 128, 43));
    }

    #[test]
    fn spread_report() {
        let r = verify_construction(Family::Spread, Some(4), &VerifyOptions::default()).unwrap();
        assert!(r.pass, "{:?}", r.mismatches);
        assert_eq!(
            r.measured,
            CodeParameters {
                n: 5,
                two_k: 4,
                d: 4,
                s: 1
            }
        );
        assert_eq!(r.oracle_min_weight, Some(8));
        assert_eq!(r.ratio, Some(ExactRatio::new(5, 1)));
    }

    #[test]
    fn variant_report_records_frequencies() {
        let r = verify_construction(Family::Variant, Some(2), &VerifyOptions::default()).unwrap();
        assert!(r.pass, "{:?}", r.mismatches);
        assert_eq!(r.weight_set, BTreeSet::from([8, 9]));
        assert_eq!(r.weight_distribution.total(), 31);
        assert_eq!(r.lambda_match, None);
    }

    #[test]
    fn missing_size_and_bad_sizes() {
        let opts = VerifyOptions::default();
        assert!(verify_construction(Family::Spread, None, &opts).is_err());
        assert!(verify_construction(Family::Spread, Some(5), &opts).is_err());
        assert!(verify_construction(Family::Variant, Some(9), &opts).is_err());
        assert!(verify_construction(Family::Fano, Some(5), &opts).is_err());
    }

    #[test]
    fn sum_check() {
        let code = three_cover_code(5).unwrap();
        let r = sum_construction_check(&code, 2, &VerifyOptions::default()).unwrap();
        assert!(r.pass, "{:?}", r.mismatches);
        assert_eq!((r.measured.n, r.measured.d, r.measured.s), (62, 48, 14));
        assert!(sum_construction_check(&code, 1, &VerifyOptions::default()).is_err());
    }

    #[test]
    fn wrong_claim_fails() {
        let mut r =
            verify_construction(Family::Spread, Some(4), &VerifyOptions::default()).unwrap();
        r.claimed = Some(CodeParameters::new(5, 4, 3));
        r.claimed_weight_set = Some(BTreeSet::from([3]));
        r.mismatches.clear();
        let r = r.finish();
        assert!(!r.pass);
        assert_eq!(r.mismatches.len(), 2);
    }

    #[test]
    fn oracle_refuses_large_dims() {
        let code = three_cover_code(5).unwrap();
        assert!(cross_check_oracle(&code, 4, Strategy::Scan).is_err());
        assert!(cross_check_oracle(&code, 14, Strategy::Scan).unwrap());
    }

    #[test]
    fn arbitrary_code_report() {
        let code =
            AdditiveLineCode::from_lines(3, [crate::geometry::Line::from_triple(1, 2, 3).unwrap()])
                .unwrap();
        let r = verify_code(&code, &VerifyOptions::default()).unwrap();
        assert_eq!(r.measured.d, 0);
        assert_eq!(r.oracle_min_weight, Some(0));
        assert_eq!(r.ratio, Some(ExactRatio::new(1, 1)));
        assert!(r.pass);
    }
}
