//! Seeded invariant suite: samples the cube and the space of
//! exclusivity-satisfying partition vectors, evaluates every library
//! invariant, and reports the worst observed violation per property.
//!
//! The sampling is fully determined by the seed, so two runs with equal
//! parameters produce byte-identical reports.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra5::{
    complement_primary, complement_vec, dual_primary, dual_vec, intersection_vec, negation_primary,
    negation_vec, union_vec,
};
use crate::bipolar::decompose;
use crate::hexa::{penta_of_hexa, to_hexa};
use crate::penta::{from_penta, ten_term_decomposition, to_penta, Variant};
use crate::tolerance::TolerancePolicy;
use crate::types::{NeutroTriple, PentaVector};

/// Partition identities hold to a few ulps; this leaves ample headroom.
const PARTITION_TOL: f64 = 1e-12;
/// Inverse transforms agree with the sampled triple componentwise.
const ROUNDTRIP_TOL: f64 = 1e-9;
/// Commuting diagrams and fold consistency compare two algebraic routes.
const DIAGRAM_TOL: f64 = 1e-12;
/// Exact requirements: the observed violation must be identically zero.
const EXACT: f64 = 0.0;

#[derive(Debug, Clone)]
pub struct PropertyOutcome {
    pub name: &'static str,
    pub cases: u64,
    pub passes: u64,
    pub max_violation: f64,
    pub tolerance: f64,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.passes == self.cases && self.max_violation <= self.tolerance
    }
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub samples: u64,
    pub seed: u64,
    pub version: Option<String>,
    pub properties: Vec<PropertyOutcome>,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.properties.iter().all(PropertyOutcome::passed)
    }

    pub fn with_version(mut self, version: String) -> Self {
        self.version = Some(version);
        self
    }
}

fn fmt_number(v: f64) -> String {
    if v == 0.0 {
        "0".to_string()
    } else {
        format!("{v:.3e}")
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(version) = &self.version {
            writeln!(out, "neutroval {version}")?;
        }
        writeln!(out, "check: samples={} seed={}", self.samples, self.seed)?;
        writeln!(
            out,
            "{:<52} {:>8} {:>8} {:>13} {:>9} {:>6}",
            "property", "cases", "passes", "max_violation", "tolerance", "result"
        )?;
        for p in &self.properties {
            writeln!(
                out,
                "{:<52} {:>8} {:>8} {:>13} {:>9} {:>6}",
                p.name,
                p.cases,
                p.passes,
                fmt_number(p.max_violation),
                fmt_number(p.tolerance),
                if p.passed() { "pass" } else { "FAIL" }
            )?;
        }
        let passed = self.properties.iter().filter(|p| p.passed()).count();
        let total = self.properties.len();
        if passed == total {
            writeln!(out, "result: PASS ({total}/{total} properties)")
        } else {
            writeln!(out, "result: FAIL ({passed}/{total} properties)")
        }
    }
}

/// Tracks one property across cases: the violations reported between two
/// `close_case` calls belong to a single sampled case, which passes when its
/// worst violation stays within tolerance.
struct Acc {
    tolerance: f64,
    cases: u64,
    passes: u64,
    max: f64,
    current: f64,
}

impl Acc {
    fn new(tolerance: f64) -> Self {
        Self {
            tolerance,
            cases: 0,
            passes: 0,
            max: 0.0,
            current: 0.0,
        }
    }

    fn see(&mut self, violation: f64) {
        if violation > self.current || violation.is_nan() {
            self.current = violation;
        }
    }

    fn close_case(&mut self) {
        self.cases += 1;
        if self.current <= self.tolerance {
            self.passes += 1;
        }
        if self.current > self.max || self.current.is_nan() {
            self.max = self.current;
        }
        self.current = 0.0;
    }

    fn outcome(&self, name: &'static str) -> PropertyOutcome {
        PropertyOutcome {
            name,
            cases: self.cases,
            passes: self.passes,
            max_violation: self.max,
            tolerance: self.tolerance,
        }
    }

    fn diff(&mut self, a: f64, b: f64) {
        self.see((a - b).abs());
    }
}

fn penta_diff(acc: &mut Acc, a: &PentaVector, b: &PentaVector) {
    for (x, y) in a.components().iter().zip(b.components()) {
        acc.diff(*x, y);
    }
}

fn random_triple(rng: &mut ChaCha8Rng) -> NeutroTriple {
    NeutroTriple::new_unchecked(rng.random(), rng.random(), rng.random())
}

/// Draws a partition vector with components on a dyadic lattice (multiples
/// of 2^-12) and one of c, u forced to zero. On that lattice every min/max
/// and sum in the vector operators is exact in f64, so the algebraic laws
/// are required to hold bit-for-bit.
fn random_exclusive_penta(rng: &mut ChaCha8Rng) -> PentaVector {
    const DENOM: u32 = 1 << 12;
    let mut cuts = [
        rng.random_range(0..=DENOM),
        rng.random_range(0..=DENOM),
        rng.random_range(0..=DENOM),
    ];
    cuts.sort_unstable();
    let scale = 1.0 / f64::from(DENOM);
    let parts = [
        f64::from(cuts[0]) * scale,
        f64::from(cuts[1] - cuts[0]) * scale,
        f64::from(cuts[2] - cuts[1]) * scale,
        f64::from(DENOM - cuts[2]) * scale,
    ];
    if rng.random::<bool>() {
        PentaVector::new_unchecked(parts[0], parts[1], parts[2], 0.0, parts[3])
    } else {
        PentaVector::new_unchecked(parts[0], 0.0, parts[2], parts[1], parts[3])
    }
}

/// Runs the whole suite on `samples` seeded draws.
pub fn run_check(samples: u64, seed: u64) -> CheckReport {
    assert!(samples >= 1, "samples must be at least 1");
    let tol = TolerancePolicy::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut bipolar_identity = Acc::new(PARTITION_TOL);
    let mut bipolar_partition = Acc::new(PARTITION_TOL);
    let mut bipolar_exclusivity = Acc::new(EXACT);
    let mut bipolar_nonneg = Acc::new(EXACT);
    let mut penta1_partition = Acc::new(PARTITION_TOL);
    let mut penta2_partition = Acc::new(PARTITION_TOL);
    let mut penta_exclusivity = Acc::new(EXACT);
    let mut penta1_roundtrip = Acc::new(ROUNDTRIP_TOL);
    let mut penta2_roundtrip = Acc::new(ROUNDTRIP_TOL);
    let mut ten_partition = Acc::new(PARTITION_TOL);
    let mut ten_fold = Acc::new(DIAGRAM_TOL);
    let mut hexa1_partition = Acc::new(PARTITION_TOL);
    let mut hexa2_partition = Acc::new(PARTITION_TOL);
    let mut hexa_exclusivity = Acc::new(EXACT);
    let mut hexa_agreement = Acc::new(EXACT);
    let mut hexa_fold = Acc::new(DIAGRAM_TOL);
    let mut diagram_complement = Acc::new(DIAGRAM_TOL);
    let mut diagram_negation = Acc::new(DIAGRAM_TOL);
    let mut diagram_dual = Acc::new(DIAGRAM_TOL);

    for _ in 0..samples {
        let x = random_triple(&mut rng);
        let b = decompose(x.mu(), x.nu());
        bipolar_identity.diff(x.mu() + x.nu() + b.pi() - b.kappa(), 1.0);
        bipolar_partition.diff(b.partition_sum(), 1.0);
        bipolar_exclusivity.see(b.pi() * b.kappa());
        bipolar_exclusivity.see(b.tau_plus() * b.tau_minus());
        for component in b.components() {
            bipolar_nonneg.see(-component.min(0.0));
        }

        let p1 = to_penta(x, Variant::I);
        let p2 = to_penta(x, Variant::II);
        penta1_partition.diff(p1.partition_sum(), 1.0);
        penta2_partition.diff(p2.partition_sum(), 1.0);
        penta_exclusivity.see(p1.u() * p1.c());
        penta_exclusivity.see(p2.u() * p2.c());
        match from_penta(p1, Variant::I, &tol) {
            Ok(back) => {
                penta1_roundtrip.diff(back.mu(), x.mu());
                penta1_roundtrip.diff(back.omega(), x.omega());
                penta1_roundtrip.diff(back.nu(), x.nu());
            }
            Err(_) => penta1_roundtrip.see(f64::INFINITY),
        }
        match from_penta(p2, Variant::II, &tol) {
            Ok(back) => {
                penta2_roundtrip.diff(back.mu(), x.mu());
                penta2_roundtrip.diff(back.omega(), x.omega());
                penta2_roundtrip.diff(back.nu(), x.nu());
            }
            Err(_) => penta2_roundtrip.see(f64::INFINITY),
        }

        let ten = ten_term_decomposition(x);
        ten_partition.diff(ten.partition_sum(), 1.0);
        penta_diff(&mut ten_fold, &ten.fold(), &p1);

        let h1 = to_hexa(x, Variant::I);
        let h2 = to_hexa(x, Variant::II);
        hexa1_partition.diff(h1.partition_sum(), 1.0);
        hexa2_partition.diff(h2.partition_sum(), 1.0);
        for hx in [&h1, &h2] {
            hexa_exclusivity.see(hx.t() * hx.f());
            hexa_exclusivity.see(hx.u() * hx.c());
        }
        for (hx, p) in [(&h1, &p1), (&h2, &p2)] {
            hexa_agreement.diff(hx.h(), p.h());
            hexa_agreement.diff(hx.u(), p.u());
            hexa_agreement.diff(hx.c(), p.c());
        }
        for (hx, p, v) in [(&h1, &p1, Variant::I), (&h2, &p2, Variant::II)] {
            match penta_of_hexa(hx, v, &tol) {
                Ok(folded) => penta_diff(&mut hexa_fold, &folded, p),
                Err(_) => hexa_fold.see(f64::INFINITY),
            }
        }

        for (v, p) in [(Variant::I, &p1), (Variant::II, &p2)] {
            penta_diff(
                &mut diagram_complement,
                &to_penta(complement_primary(x), v),
                &complement_vec(p),
            );
            penta_diff(
                &mut diagram_negation,
                &to_penta(negation_primary(x), v),
                &negation_vec(p),
            );
            penta_diff(
                &mut diagram_dual,
                &to_penta(dual_primary(x), v),
                &dual_vec(p),
            );
        }

        for acc in [
            &mut bipolar_identity,
            &mut bipolar_partition,
            &mut bipolar_exclusivity,
            &mut bipolar_nonneg,
            &mut penta1_partition,
            &mut penta2_partition,
            &mut penta_exclusivity,
            &mut penta1_roundtrip,
            &mut penta2_roundtrip,
            &mut ten_partition,
            &mut ten_fold,
            &mut hexa1_partition,
            &mut hexa2_partition,
            &mut hexa_exclusivity,
            &mut hexa_agreement,
            &mut hexa_fold,
            &mut diagram_complement,
            &mut diagram_negation,
            &mut diagram_dual,
        ] {
            acc.close_case();
        }
    }

    let mut vec_idempotence = Acc::new(EXACT);
    let mut vec_commutativity = Acc::new(EXACT);
    let mut vec_associativity = Acc::new(EXACT);
    let mut vec_de_morgan = Acc::new(EXACT);
    let mut vec_closure = Acc::new(EXACT);
    let mut vec_unary = Acc::new(EXACT);

    fn apply(result: crate::Result<PentaVector>, acc: &mut Acc) -> PentaVector {
        match result {
            Ok(v) => v,
            Err(_) => {
                acc.see(f64::INFINITY);
                PentaVector::H
            }
        }
    }

    for _ in 0..samples {
        let a = random_exclusive_penta(&mut rng);
        let b = random_exclusive_penta(&mut rng);
        let c = random_exclusive_penta(&mut rng);

        let ab_union = apply(union_vec(&a, &b, &tol), &mut vec_closure);
        let ab_inter = apply(intersection_vec(&a, &b, &tol), &mut vec_closure);
        for d in [&ab_union, &ab_inter] {
            vec_closure.see(d.c() * d.u());
            vec_closure.see((d.t() + d.c() + d.u() + d.f() - 1.0).max(0.0));
        }

        let aa_union = apply(union_vec(&a, &a, &tol), &mut vec_idempotence);
        let aa_inter = apply(intersection_vec(&a, &a, &tol), &mut vec_idempotence);
        penta_diff(&mut vec_idempotence, &aa_union, &a);
        penta_diff(&mut vec_idempotence, &aa_inter, &a);

        let ba_union = apply(union_vec(&b, &a, &tol), &mut vec_commutativity);
        let ba_inter = apply(intersection_vec(&b, &a, &tol), &mut vec_commutativity);
        penta_diff(&mut vec_commutativity, &ab_union, &ba_union);
        penta_diff(&mut vec_commutativity, &ab_inter, &ba_inter);

        let bc_union = apply(union_vec(&b, &c, &tol), &mut vec_associativity);
        let bc_inter = apply(intersection_vec(&b, &c, &tol), &mut vec_associativity);
        let left_union = apply(union_vec(&ab_union, &c, &tol), &mut vec_associativity);
        let right_union = apply(union_vec(&a, &bc_union, &tol), &mut vec_associativity);
        let left_inter = apply(
            intersection_vec(&ab_inter, &c, &tol),
            &mut vec_associativity,
        );
        let right_inter = apply(
            intersection_vec(&a, &bc_inter, &tol),
            &mut vec_associativity,
        );
        penta_diff(&mut vec_associativity, &left_union, &right_union);
        penta_diff(&mut vec_associativity, &left_inter, &right_inter);

        let comp_inter = apply(
            intersection_vec(&complement_vec(&a), &complement_vec(&b), &tol),
            &mut vec_de_morgan,
        );
        let comp_union = apply(
            union_vec(&complement_vec(&a), &complement_vec(&b), &tol),
            &mut vec_de_morgan,
        );
        penta_diff(&mut vec_de_morgan, &complement_vec(&ab_union), &comp_inter);
        penta_diff(&mut vec_de_morgan, &complement_vec(&ab_inter), &comp_union);

        penta_diff(&mut vec_unary, &complement_vec(&complement_vec(&a)), &a);
        penta_diff(&mut vec_unary, &negation_vec(&negation_vec(&a)), &a);
        penta_diff(&mut vec_unary, &dual_vec(&dual_vec(&a)), &a);
        penta_diff(
            &mut vec_unary,
            &complement_vec(&negation_vec(&a)),
            &dual_vec(&a),
        );
        penta_diff(
            &mut vec_unary,
            &negation_vec(&complement_vec(&a)),
            &dual_vec(&a),
        );
        penta_diff(
            &mut vec_unary,
            &dual_vec(&complement_vec(&a)),
            &negation_vec(&a),
        );

        for acc in [
            &mut vec_idempotence,
            &mut vec_commutativity,
            &mut vec_associativity,
            &mut vec_de_morgan,
            &mut vec_closure,
            &mut vec_unary,
        ] {
            acc.close_case();
        }
    }

    let properties = vec![
        bipolar_identity.outcome("bipolar identity mu+nu+pi-kappa = 1"),
        bipolar_partition.outcome("bipolar profile partition"),
        bipolar_exclusivity.outcome("bipolar exclusivity pi*kappa, tau+*tau-"),
        bipolar_nonneg.outcome("bipolar nonnegativity"),
        penta1_partition.outcome("penta partition (variant 1)"),
        penta2_partition.outcome("penta partition (variant 2)"),
        penta_exclusivity.outcome("penta exclusivity u*c (both variants)"),
        penta1_roundtrip.outcome("penta round trip (variant 1)"),
        penta2_roundtrip.outcome("penta round trip (variant 2)"),
        ten_partition.outcome("ten-term partition"),
        ten_fold.outcome("ten-term fold matches penta variant 1"),
        hexa1_partition.outcome("hexa partition (variant 1)"),
        hexa2_partition.outcome("hexa partition (variant 2)"),
        hexa_exclusivity.outcome("hexa exclusivity t*f, u*c (both variants)"),
        hexa_agreement.outcome("hexa h,u,c agree with penta (both variants)"),
        hexa_fold.outcome("hexa ambiguity fold matches penta"),
        diagram_complement.outcome("diagram: complement commutes with to_penta"),
        diagram_negation.outcome("diagram: negation commutes with to_penta"),
        diagram_dual.outcome("diagram: dual commutes with to_penta"),
        vec_idempotence.outcome("vector union/intersection idempotence"),
        vec_commutativity.outcome("vector union/intersection commutativity"),
        vec_associativity.outcome("vector union/intersection associativity"),
        vec_de_morgan.outcome("vector De Morgan under complement"),
        vec_closure.outcome("vector closure: bound and exclusivity"),
        vec_unary.outcome("vector unary involutions and compositions"),
    ];

    CheckReport {
        samples,
        seed,
        version: None,
        properties,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes_everything() {
        let report = run_check(500, 7);
        for p in &report.properties {
            assert!(
                p.passed(),
                "{}: max violation {} exceeds {}",
                p.name,
                p.max_violation,
                p.tolerance
            );
        }
        assert!(report.all_passed());
    }

    #[test]
    fn reports_are_deterministic_per_seed() {
        let a = run_check(200, 42).to_string();
        let b = run_check(200, 42).to_string();
        assert_eq!(a, b);
        let c = run_check(200, 43).to_string();
        assert_ne!(a, c);
    }

    #[test]
    fn report_layout() {
        let report = run_check(50, 1);
        let text = report.to_string();
        assert!(text.starts_with("check: samples=50 seed=1\n"));
        assert!(text.contains("penta round trip (variant 1)"));
        assert!(text.trim_end().ends_with("result: PASS (25/25 properties)"));
        let versioned = run_check(50, 1).with_version("9.9.9".into()).to_string();
        assert!(versioned.starts_with("neutroval 9.9.9\n"));
    }
}
