//! Named verification campaigns replaying the reference numeric checks.

use serde::{Deserialize, Serialize};

use crate::bound::Hypothesis;
use crate::error::{Error, Result};
use crate::faberkrahn::{fk_from_iso, fk_euclidean};
use crate::functional::{gn_nagy, gn_nagy_q, sobolev_euclidean, sobolev_lift};
use crate::group::GroupSpec;
use crate::isoperimetry::{
    bathtub_constant, bathtub_constant_n1_closed, bathtub_oracle, iso_euclidean_value,
    iso_lower_heisenberg, pansu_isoperimetric,
};
use crate::pleijel::{
    alpha_m, alpha_quotient, best_gamma_bound, combined_quotient_upper, example_criterion,
    gamma_euclidean, gamma_from, gamma_tilde, pansu_quotient_suite, pleijel_iso_bound,
    pleijel_lifting_bound, pleijel_pansu,
};
use crate::report::VerificationRecord;
use crate::specfun::{bessel_first_zero, bessel_j, lng, BesselZeroBracket};
use crate::value::{Method, Value};
use crate::weyl::{
    cn_closed_form, cn_hurwitz, cn_quotient_lower_bound, cn_series, weyl_euclidean,
    weyl_heisenberg, weyl_hn_rk, weyl_product,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CampaignName {
    Maincomp,
    Pansu,
    Bessel,
    Hps,
    Tables,
    Series,
    Lifting,
    All,
}

impl CampaignName {
    pub const NAMED: [CampaignName; 7] = [
        CampaignName::Maincomp,
        CampaignName::Pansu,
        CampaignName::Bessel,
        CampaignName::Hps,
        CampaignName::Tables,
        CampaignName::Series,
        CampaignName::Lifting,
    ];

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "maincomp" => CampaignName::Maincomp,
            "pansu" => CampaignName::Pansu,
            "bessel" => CampaignName::Bessel,
            "hps" => CampaignName::Hps,
            "tables" => CampaignName::Tables,
            "series" => CampaignName::Series,
            "lifting" => CampaignName::Lifting,
            "all" => CampaignName::All,
            other => return Err(Error::domain("run_campaign", format!("unknown suite '{other}'"))),
        })
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            CampaignName::Maincomp => "maincomp",
            CampaignName::Pansu => "pansu",
            CampaignName::Bessel => "bessel",
            CampaignName::Hps => "hps",
            CampaignName::Tables => "tables",
            CampaignName::Series => "series",
            CampaignName::Lifting => "lifting",
            CampaignName::All => "all",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Campaign {
    pub name: CampaignName,
    pub records: Vec<VerificationRecord>,
    pub exit_status: i32,
}

impl Campaign {
    fn assemble(name: CampaignName, mut records: Vec<VerificationRecord>) -> Campaign {
        records.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
        let exit_status = if records.iter().all(VerificationRecord::passed) { 0 } else { 1 };
        Campaign { name, records, exit_status }
    }

    pub fn passed(&self) -> bool {
        self.exit_status == 0
    }
}

/// Execute the claim list of a campaign. Failing records are data, not
/// errors; `Err` is reserved for broken preconditions.
pub fn run_campaign(name: CampaignName, tolerance_multiplier: f64) -> Result<Campaign> {
    if !(0.1..=100.0).contains(&tolerance_multiplier) {
        return Err(Error::domain(
            "run_campaign",
            format!("tolerance multiplier {tolerance_multiplier} outside [0.1, 100]"),
        ));
    }
    let t = tolerance_multiplier;
    let records = match name {
        CampaignName::Maincomp => maincomp_claims(t)?,
        CampaignName::Pansu => pansu_claims(t)?,
        CampaignName::Bessel => bessel_claims(t)?,
        CampaignName::Hps => hps_claims(t)?,
        CampaignName::Tables => tables_claims(t)?,
        CampaignName::Series => series_claims(t)?,
        CampaignName::Lifting => lifting_claims(t)?,
        CampaignName::All => {
            let mut all = Vec::new();
            for sub in CampaignName::NAMED {
                all.extend(run_campaign(sub, t)?.records);
            }
            all
        }
    };
    Ok(Campaign::assemble(name, records))
}

fn maincomp_claims(t: f64) -> Result<Vec<VerificationRecord>> {
    let mut r = Vec::new();

    let iso1 = iso_lower_heisenberg(1)?;
    r.push(VerificationRecord::two_sided(
        "s11.isopercor.n1",
        "isoperimetric lower bound on H_1",
        iso1.bound.value,
        Value::paper(3.09468, 1e-5),
        1e-4 * t,
    ));
    let pansu1 = pansu_isoperimetric(1)?;
    r.push(VerificationRecord::two_sided(
        "s11.pansusconj.n1",
        "conjectured sharp isoperimetric constant on H_1",
        pansu1.bound.value,
        Value::paper(4.39854, 1e-5),
        1e-4 * t,
    ));
    r.push(VerificationRecord::two_sided(
        "s11.bathtubconst1.n1",
        "gamma-function form of the bathtub constant vs its radical form at n = 1",
        bathtub_constant(1)?,
        bathtub_constant_n1_closed(),
        1e-12 * t,
    ));
    for n in [1u32, 2] {
        r.push(VerificationRecord::two_sided(
            format!("s11.bathtub.quad.n{n}"),
            format!("quadrature oracle for the bathtub constant at n = {n}"),
            bathtub_oracle(n, 4096)?,
            bathtub_constant(n)?,
            1e-6 * t,
        ));
    }

    let fk1 = fk_from_iso(&iso1, 4)?;
    r.push(VerificationRecord::two_sided(
        "s11.fkiso.n1",
        "Faber-Krahn lower bound on H_1 via symmetrization",
        fk1.value,
        Value::paper(8.78829, 1e-5),
        1e-4 * t,
    ));
    let iso2 = iso_lower_heisenberg(2)?;
    let fk2 = fk_from_iso(&iso2, 6)?;
    r.push(VerificationRecord::two_sided(
        "s11.fkiso.n2",
        "Faber-Krahn lower bound on H_2 via symmetrization",
        fk2.value,
        Value::paper(17.9011, 1e-4),
        1e-4 * t,
    ));
    for d in 2..=40u32 {
        let via_iso = fk_from_iso(&iso_euclidean_value(d)?, d)?;
        r.push(VerificationRecord::two_sided(
            format!("s11.symmetrization.d{d:02}"),
            format!("symmetrization equality case in R^{d}"),
            via_iso.value,
            fk_euclidean(d)?,
            1e-10 * t,
        ));
    }
    r.push(VerificationRecord::two_sided(
        "s11.gammaiso.n1",
        "Pleijel bound on H_1 through the isoperimetric route",
        gamma_from(&fk1, weyl_heisenberg(1)?, 4.0)?.value,
        Value::paper(1.65737, 1e-5),
        1e-4 * t,
    ));
    r.push(VerificationRecord::two_sided(
        "s11.gammaiso.n2",
        "Pleijel bound on H_2 through the isoperimetric route",
        gamma_from(&fk2, weyl_heisenberg(2)?, 6.0)?.value,
        Value::paper(1.26183, 1e-5),
        1e-4 * t,
    ));

    let one = Value::literal(1.0);
    for n in 4..=13u32 {
        let g = GroupSpec::new(n, 0)?;
        let b = best_gamma_bound(g, Hypothesis::Unconditional)?;
        r.push(VerificationRecord::strictly_below(
            format!("s9.maincomp.k0.n{n:02}"),
            format!("unconditional Pleijel bound below one on {g}"),
            b.bound.value,
            one,
        ));
    }
    for n in 3..=13u32 {
        let g = GroupSpec::new(n, 1)?;
        let b = best_gamma_bound(g, Hypothesis::Unconditional)?;
        r.push(VerificationRecord::strictly_below(
            format!("s9.maincomp.k1.n{n:02}"),
            format!("unconditional Pleijel bound below one on {g}"),
            b.bound.value,
            one,
        ));
    }
    r.push(VerificationRecord::two_sided(
        "s9.maincomp.value.n3k1",
        "lifted Pleijel bound on H_3 x R",
        pleijel_lifting_bound(GroupSpec::new(3, 1)?)?.value,
        Value::paper(0.8871, 1e-4),
        5e-4 * t,
    ));
    for k in 2..=20u32 {
        let g = GroupSpec::new(1, k)?;
        let b = best_gamma_bound(g, Hypothesis::Unconditional)?;
        r.push(VerificationRecord::strictly_below(
            format!("s11.maincomp.n1k{k:02}"),
            format!("unconditional Pleijel bound below one on {g}"),
            b.bound.value,
            one,
        ));
    }
    for k in 1..=20u32 {
        let g = GroupSpec::new(2, k)?;
        let b = best_gamma_bound(g, Hypothesis::Unconditional)?;
        r.push(VerificationRecord::strictly_below(
            format!("s11.maincomp.n2k{k:02}"),
            format!("unconditional Pleijel bound below one on {g}"),
            b.bound.value,
            one,
        ));
    }
    r.push(VerificationRecord::two_sided(
        "s11.maincomp.value.n1k2",
        "Pleijel bound on H_1 x R^2",
        best_gamma_bound(GroupSpec::new(1, 2)?, Hypothesis::Unconditional)?.bound.value,
        Value::paper(0.701019, 1e-6),
        5e-4 * t,
    ));
    r.push(VerificationRecord::two_sided(
        "s11.maincomp.value.n2k1",
        "Pleijel bound on H_2 x R",
        best_gamma_bound(GroupSpec::new(2, 1)?, Hypothesis::Unconditional)?.bound.value,
        Value::paper(0.823715, 1e-6),
        5e-4 * t,
    ));
    Ok(r)
}

fn pansu_claims(t: f64) -> Result<Vec<VerificationRecord>> {
    let mut r = Vec::new();
    let printed = [(1u32, 0.406114, 1e-6), (2, 0.155327, 1e-6), (3, 0.0641172, 1e-7)];
    for (n, want, ulp) in printed {
        r.push(VerificationRecord::two_sided(
            format!("s11.panpl1.n{n}"),
            format!("conjecture-conditional Pleijel bound on H_{n}"),
            pleijel_pansu(n)?.value,
            Value::paper(want, ulp),
            5e-4 * t,
        ));
    }
    let base = gamma_euclidean(4)?.mul(alpha_m(1)?).mul(gamma_tilde(1)?);
    r.push(VerificationRecord::two_sided(
        "s11.pansu.baseprod",
        "base product gamma(R^4) alpha_1 gamma_tilde_1 = 2^5 3^3/(j_{1,1}^4 pi^2)",
        base,
        Value::paper(0.406112, 1e-6),
        1e-4 * t,
    ));
    let one = Value::literal(1.0);
    for m in 34..=200u32 {
        r.push(VerificationRecord::strictly_below(
            format!("s11.pansu.combined.m{m:03}"),
            format!("combined quotient bound below one at m = {m}"),
            combined_quotient_upper(m)?,
            one,
        ));
    }
    let mut worst = f64::NEG_INFINITY;
    let cap = std::f64::consts::E * std::f64::consts::E / 4.0;
    for m in 2..=10_000u32 {
        worst = worst.max(alpha_quotient(m)?.estimate / cap);
    }
    r.push(VerificationRecord::strictly_below(
        "s11.pansu.alphacap",
        "max over m = 2..10^4 of (alpha quotient)/(e^2/4)",
        Value::exact(worst),
        one,
    ));
    let den13 = (-1.0f64 / 24.0).exp() - std::f64::consts::E / 13.0;
    r.push(VerificationRecord::two_sided(
        "s9.quotient99.m13",
        "quotient-bound denominator at m = 13",
        Value::exact(den13),
        Value::paper(0.75009, 1e-5),
        1e-4 * t,
    ));
    let recip63 = 1.0 / ((-1.0f64 / 124.0).exp() - std::f64::consts::E / 63.0);
    r.push(VerificationRecord::two_sided(
        "s11.pansu.m63",
        "reciprocal quotient-bound denominator at m = 63",
        Value::exact(recip63),
        Value::paper(1.05394, 1e-5),
        1e-4 * t,
    ));
    let threshold = ((1.0 - 2.108f64.ln()) / 2.0).powi(-2);
    r.push(VerificationRecord::two_sided(
        "s11.pansu.threshold",
        "crossing point of 2 e^-1 exp(2 m^-1/2) 1.054 below one",
        Value::exact(threshold),
        Value::paper(61.8732, 1e-4),
        1e-4 * t,
    ));
    // curl-example criterion under the conjecture: constant curl, so the
    // predicate reduces to 1/gamma(H_1) > 1
    let fkw = pleijel_pansu(1)?.value.recip();
    let (ok, margin) = example_criterion(1.0, 1.0, fkw.estimate)?;
    r.push(VerificationRecord {
        claim_id: "s6.curl.criterion".into(),
        description: "curl-example criterion with constant curl under the conjectural value"
            .into(),
        computed: Value::exact(fkw.estimate),
        expected: one,
        tolerance: 0.0,
        absolute: true,
        status: if ok { crate::report::Status::Pass } else { crate::report::Status::Fail },
        margin,
    });
    Ok(r)
}

fn bessel_claims(t: f64) -> Result<Vec<VerificationRecord>> {
    let mut r = Vec::new();
    // printed zeros: (id, order, printed, abs tol)
    let zeros = [
        ("s11.jzero.n1", 1.0, 3.8317, 1e-4),
        ("s11.jzero.n2", 2.0, 5.1356, 1e-4),
        ("s11.jzero.n3", 3.0, 6.3802, 1e-4),
        ("s11.jzero.n2fine", 2.0, 5.13562, 1e-5),
        ("s11.jzero.n52", 2.5, 5.76346, 1e-5),
    ];
    for (id, nu, want, tol) in zeros {
        let z = bessel_first_zero(nu)?;
        r.push(VerificationRecord::two_sided_abs(
            id,
            format!("first zero of J_{nu} against the printed table value"),
            z,
            Value::literal(want),
            tol * t,
        ));
        r.push(VerificationRecord::strictly_below(
            format!("{id}.res"),
            format!("residual |J_{nu}| at the computed zero"),
            Value::new(bessel_j(nu, z.estimate)?.estimate.abs(), 0.0, Method::RootFind),
            Value::literal(1e-9),
        ));
    }
    r.push(VerificationRecord::two_sided_abs(
        "s11.jzero.half",
        "first zero of J_{1/2} equals pi",
        bessel_first_zero(0.5)?,
        Value::literal(std::f64::consts::PI),
        1e-9 * t,
    ));
    for m in 1..=100u32 {
        let mf = m as f64;
        let ratio = bessel_first_zero(mf - 1.0)?.div(bessel_first_zero(mf)?);
        let cap = (-1.0 / (mf.sqrt() * ((mf + 1.0).sqrt() + 1.0))).exp();
        r.push(VerificationRecord::strictly_below(
            format!("s11.besselzero.m{m:03}"),
            format!("zero-ratio inequality at m = {m}"),
            ratio,
            Value::exact(cap),
        ));
    }
    for nu in 1..=200u32 {
        let br = BesselZeroBracket::new(nu as f64)?;
        let z = bessel_first_zero(nu as f64)?;
        let margin = (z.estimate - br.lower).min(br.upper - z.estimate);
        r.push(VerificationRecord::strictly_above(
            format!("s11.bracket.nu{nu:03}"),
            format!("first zero strictly inside the enclosure at nu = {nu}"),
            Value::new(margin, z.err, Method::RootFind),
            Value::literal(0.0),
        ));
    }
    Ok(r)
}

fn hps_claims(t: f64) -> Result<Vec<VerificationRecord>> {
    let mut r = Vec::new();
    let mut prev = gamma_euclidean(2)?.estimate;
    let mut worst_ratio = f64::NEG_INFINITY;
    for d in 3..=200u32 {
        let g = gamma_euclidean(d)?.estimate;
        worst_ratio = worst_ratio.max(g / prev);
        prev = g;
    }
    r.push(VerificationRecord::strictly_below(
        "s11.hps.monotone",
        "max consecutive ratio of gamma(R^d) over d = 2..200",
        Value::exact(worst_ratio),
        Value::literal(1.0),
    ));
    // Dimensional-ratio limit: the consecutive ratio converges to 2/e like
    // d^(-2/3) and is still ~2.4% away at d = 200, so this stated tolerance
    // is not attainable there; the record reports the honest outcome.
    let ratio200 = gamma_euclidean(200)?;
    let ratio = Value::new(
        gamma_rd_ratio_201(ratio200)?,
        1e-9,
        Method::RootFind,
    );
    r.push(VerificationRecord::two_sided(
        "s11.hps.ratio200",
        "consecutive ratio of gamma(R^d) at d = 200 against the limit 2/e",
        ratio,
        Value::exact(2.0 / std::f64::consts::E),
        1e-2 * t,
    ));
    Ok(r)
}

fn gamma_rd_ratio_201(gamma200: Value) -> Result<f64> {
    // gamma(R^201)/gamma(R^200); the 201st value sits just beyond the
    // stated range of gamma_euclidean, so evaluate it directly
    let d = 201f64;
    let j = bessel_first_zero(d / 2.0 - 1.0)?;
    let ln201 = d * std::f64::consts::LN_2 + 2.0 * lng(d / 2.0 + 1.0) - d * j.estimate.ln();
    Ok((ln201 - gamma200.estimate.ln()).exp())
}

fn tables_claims(t: f64) -> Result<Vec<VerificationRecord>> {
    let mut r = Vec::new();
    let pi2 = std::f64::consts::PI * std::f64::consts::PI;
    r.push(VerificationRecord::two_sided(
        "s7.cn.n01",
        "c_1 = pi^2/8",
        cn_hurwitz(1)?,
        Value::exact(pi2 / 8.0),
        1e-12 * t,
    ));
    r.push(VerificationRecord::two_sided(
        "s7.cn.n02",
        "c_2 = pi^2/48",
        cn_hurwitz(2)?,
        Value::exact(pi2 / 48.0),
        1e-12 * t,
    ));
    let printed_cn = [
        (3u32, 2.7378e-2, 1e-6),
        (4, 2.9303e-3, 1e-7),
        (5, 2.6027e-4, 1e-8),
        (6, 1.9706e-5, 1e-9),
        (7, 1.2988e-6, 1e-10),
        (8, 7.5736e-8, 1e-12),
        (9, 3.9589e-9, 1e-13),
        (10, 1.8749e-10, 1e-14),
        (11, 8.1149e-12, 1e-16),
        (12, 3.23369e-13, 1e-18),
        (13, 1.1938e-14, 1e-18),
    ];
    for (n, want, ulp) in printed_cn {
        r.push(VerificationRecord::two_sided(
            format!("s7.cn.n{n:02}"),
            format!("c_{n} against the printed table"),
            cn_hurwitz(n)?,
            Value::paper(want, ulp),
            5e-4 * t,
        ));
    }
    let printed_gt = [
        (1u32, 3.2423, 1e-4),
        (2, 1.8238, 1e-4),
        (3, 1.069, 1e-3),
        (4, 6.251e-1, 1e-4),
        (5, 3.628e-1, 1e-4),
        (6, 2.088e-1, 1e-4),
        (7, 1.195e-1, 1e-4),
        (8, 6.808e-2, 1e-5),
        (9, 3.86e-2, 1e-4),
        (10, 2.1801e-2, 1e-6),
        (11, 1.227e-2, 1e-5),
        (12, 6.891e-3, 1e-6),
        (13, 3.859e-3, 1e-6),
    ];
    for (n, want, ulp) in printed_gt {
        r.push(VerificationRecord::two_sided(
            format!("s9.gammatilde.n{n:02}"),
            format!("gamma_tilde_{n} against the printed table"),
            gamma_tilde(n)?,
            Value::paper(want, ulp),
            5e-4 * t,
        ));
    }
    let printed_q = [
        (4u32, 0.58475, 1e-5),
        (5, 0.5804, 1e-4),
        (6, 0.5757, 1e-4),
        (7, 0.5721, 1e-4),
        (8, 0.5697, 1e-4),
        (9, 0.5670, 1e-4),
        (10, 0.5648, 1e-4),
        (11, 0.56298, 1e-5),
        (12, 0.561398, 1e-6),
        (13, 0.560069, 1e-6),
    ];
    for (n, want, ulp) in printed_q {
        r.push(VerificationRecord::two_sided(
            format!("s9.quotient.n{n:02}"),
            format!("gamma_tilde quotient at n = {n} against the printed table"),
            gamma_tilde(n)?.div(gamma_tilde(n - 1)?),
            Value::paper(want, ulp),
            5e-4 * t,
        ));
    }
    Ok(r)
}

fn series_claims(t: f64) -> Result<Vec<VerificationRecord>> {
    let mut r = Vec::new();
    for n in 1..=13u32 {
        // two independent methods must agree within their combined bounds;
        // tolerance zero, the errors carry the slack
        r.push(VerificationRecord::two_sided(
            format!("s7.dual.n{n:02}"),
            format!("direct series vs zeta reduction for c_{n}"),
            cn_series(n, 1e-7)?,
            cn_hurwitz(n)?,
            0.0,
        ));
    }
    for n in 1..=10u32 {
        r.push(VerificationRecord::two_sided(
            format!("s7.closed.n{n:02}"),
            format!("zeta reduction vs printed closed form for c_{n}"),
            cn_hurwitz(n)?,
            cn_closed_form(n)?,
            1e-10 * t,
        ));
    }
    for n in 2..=13u32 {
        let ratio = cn_hurwitz(n)?.div(cn_hurwitz(n - 1)?);
        let lb = cn_quotient_lower_bound(n)?;
        r.push(VerificationRecord::strictly_above(
            format!("s7.quotbound.n{n:02}"),
            format!("c_{n}/c_{} above its analytic lower bound", n - 1),
            ratio,
            Value::exact(lb),
        ));
    }
    for m in 4..=13u32 {
        let row = pansu_quotient_suite(m)?;
        r.push(VerificationRecord::strictly_below(
            format!("s9.gtquot.upper.m{m:02}"),
            format!("true gamma_tilde quotient below its closed-form bound at m = {m}"),
            row.true_quotient.expect("m <= 13"),
            row.gamma_tilde_quotient_upper.expect("m >= 4"),
        ));
    }
    for m in [2u32, 3] {
        // the closed-form bound is singular here; record the negative
        // denominator that makes it so
        let den = (-1.0 / (2.0 * (m as f64 - 1.0))).exp() - std::f64::consts::E / m as f64;
        r.push(VerificationRecord::strictly_below(
            format!("s9.gtquot.singular.m{m:02}"),
            format!("quotient-bound denominator negative at m = {m} (bound undefined)"),
            Value::exact(den),
            Value::literal(0.0),
        ));
    }
    Ok(r)
}

fn lifting_claims(t: f64) -> Result<Vec<VerificationRecord>> {
    let mut r = Vec::new();
    r.push(VerificationRecord::two_sided(
        "s7.weyl.w1",
        "W(H_1) = 1/128",
        weyl_heisenberg(1)?,
        Value::literal(1.0 / 128.0),
        1e-12 * t,
    ));
    r.push(VerificationRecord::two_sided(
        "s7.weyl.w2",
        "W(H_2) = 1/(2304 pi)",
        weyl_heisenberg(2)?,
        Value::exact(1.0 / (2304.0 * std::f64::consts::PI)),
        1e-12 * t,
    ));
    for n in 1..=5u32 {
        for k in 1..=10u32 {
            let direct = weyl_hn_rk(GroupSpec::new(n, k)?)?;
            let composed = weyl_product(
                weyl_heisenberg(n)?,
                (2 * n + 2) as f64,
                weyl_euclidean(k)?,
                k as f64,
            )?;
            r.push(VerificationRecord::two_sided(
                format!("s7.weyl.compose.n{n}k{k:02}"),
                format!("product composition coherence at (n, k) = ({n}, {k})"),
                direct,
                composed,
                1e-12 * t,
            ));
        }
    }
    for big_q in [2u32, 3, 4, 6, 8, 12, 30] {
        let q = 2.0 * (big_q as f64 + 1.0) / (big_q as f64 - 1.0);
        r.push(VerificationRecord::two_sided(
            format!("s9.nagy.q{big_q:02}"),
            format!("one-dimensional interpolation constant identity at Q = {big_q}"),
            gn_nagy(q)?,
            gn_nagy_q(big_q as f64)?,
            1e-12 * t,
        ));
    }
    let q = 2.001f64;
    let at_q = gn_nagy(q)?.powf(-q / (q - 2.0));
    r.push(VerificationRecord::two_sided(
        "s9.wangzhang.k1",
        "slow-diffusion limit of the interpolation constant at q = 2.001",
        at_q,
        crate::functional::wangzhang_limit(1)?,
        1e-2 * t,
    ));
    r.push(VerificationRecord::two_sided(
        "s9.sobolev.r3",
        "sharp Sobolev constant on R^3 = 3 (pi/2)^(4/3)",
        sobolev_euclidean(3)?,
        Value::exact(3.0 * (std::f64::consts::PI / 2.0).powf(4.0 / 3.0)),
        1e-12 * t,
    ));
    for n in 1..=6u32 {
        let got = sobolev_lift(GroupSpec::new(n, 1)?)?;
        let big_q = (2 * n + 2) as f64;
        let closed = (big_q + 1.0)
            * (1.0 / (4.0 * (big_q - 1.0).powf(big_q - 1.0))).powf(1.0 / (big_q + 1.0))
            * (std::f64::consts::PI.sqrt()
                * (lng((big_q + 1.0) / 2.0) - lng((big_q + 2.0) / 2.0)).exp())
            .powf(2.0 / (big_q + 1.0))
            * crate::functional::sobolev_heisenberg(n)?
                .estimate
                .powf(big_q / (big_q + 1.0));
        r.push(VerificationRecord::two_sided(
            format!("s9.liftk1.n{n}"),
            format!("two codings of the k = 1 Sobolev lift at n = {n}"),
            got.value,
            Value::exact(closed),
            1e-12 * t,
        ));
    }
    // route identity at k = 0: the dedicated iso-route coding matches the
    // generic relabel-then-divide chain
    let iso1 = iso_lower_heisenberg(1)?;
    let via_chain = gamma_from(&fk_from_iso(&iso1, 4)?, weyl_heisenberg(1)?, 4.0)?;
    let via_op = pleijel_iso_bound(GroupSpec::new(1, 0)?, Hypothesis::Unconditional)?;
    r.push(VerificationRecord::two_sided(
        "s9.lift.isochain.n1",
        "two codings of the k = 0 isoperimetric Pleijel route",
        via_op.value,
        via_chain.value,
        1e-10 * t,
    ));
    Ok(r)
}
