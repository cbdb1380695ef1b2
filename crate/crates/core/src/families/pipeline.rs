use serde::{Deserialize, Serialize};

use super::certificate::{CheckStatus, VerificationCertificate};
use super::records::{BlockCodeRecord, ClassicalParams, PolyMatrixRecord};
use super::{expected_classical, expected_quantum, layout, FamilyId, Layout, DEFAULT_BUDGET};
use crate::convolutional::{
    check_rank_conditions, cross_orthogonal, dual_basis, free_distance_exact, generalized_singleton, is_reduced,
    shifted_hermitian_orthogonal, split_and_pad, theorem_a_bracket, trellis_edges, verify_basic, BasicStatus,
    ConvolutionalCode, FreeDistanceMethod, FreeDistanceResult, RankConditions,
};
use crate::error::{Error, Result};
use crate::fields::{FieldSpec, GaloisField, Tower};
use crate::matrix::Matrix;
use crate::negacyclic::{
    build_bch_code, certify_distance, default_parity_check, dependent_columns_cost, enumeration_cost, generator_matrix,
    hermitian_dual_containment, mds_columns_cost, verify_coset_structure, ContainmentReport, CosetLemma,
    DistanceMethod, DistanceReport, DistanceStatus, NegacyclicCode,
};
use crate::quantum::{from_selforthogonal, PurityNote, QuantumConvParams};

/// How much of the pipeline to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Depth {
    /// Construction, ranks and parameter bookkeeping; distances from designed
    /// distances only.
    Build,
    /// Every check, with exhaustive searches where the budget allows.
    Verify,
}

/// `(n, k, γ; μ)` of the self-orthogonal or generating code `V`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvParams {
    pub n: usize,
    pub k: usize,
    pub gamma: usize,
    pub mu: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyInstance {
    pub family: FamilyId,
    pub q: u64,
    pub i: u64,
    pub n: u64,
    pub field: FieldSpec,
    pub big_field: FieldSpec,
    /// The primitive `2n`-th root of unity, as coordinates in GF(q⁴).
    pub beta: Vec<u64>,
    /// `C₂`, `C₁`, `C₀` in that order.
    pub blocks: Vec<BlockCodeRecord>,
    pub rank_conditions: RankConditions,
    /// The code generated by `G(D) = H̃_{C₁} + H̃_{C₀}D`.
    pub v: ConvParams,
    pub v_generator: PolyMatrixRecord,
    /// Parameters of `V^⊥h`; `d_f` is a lower bound unless `free_distance`
    /// is closed.
    pub dual: ClassicalParams,
    pub dual_generator: Option<PolyMatrixRecord>,
    pub dual_cap: Option<usize>,
    /// `(min(d₀ + d₁, d₂), d₂)`, with upper end the Singleton value of `C₂`
    /// when `d₂` is only bounded below.
    pub bracket: (usize, usize),
    pub free_distance: FreeDistanceResult,
    pub containment: Option<ContainmentReport>,
    pub self_orthogonal: bool,
    pub quantum: Option<QuantumConvParams>,
    pub certificate: VerificationCertificate,
}

impl FamilyInstance {
    pub fn block(&self, label: &str) -> Option<&BlockCodeRecord> {
        self.blocks.iter().find(|b| b.label == label)
    }

    /// Whether the dual's free distance is known exactly.
    pub fn d_f_exact(&self) -> Option<usize> {
        self.free_distance.exact()
    }
}

fn method_name(m: DistanceMethod) -> &'static str {
    match m {
        DistanceMethod::Enumerate => "enumeration of all codewords",
        DistanceMethod::MdsColumns => "independence of every n-k parity-check columns",
        DistanceMethod::DependentColumns => "search for the smallest dependent column set",
        DistanceMethod::DesignedDistance => "designed distance with the Singleton bound",
    }
}

/// A check whose cost is unknown in advance counts against the certificate
/// when it is deferred under a budget below the default.
fn budget_rule(budget: u64) -> bool {
    budget < DEFAULT_BUDGET
}

fn distance_feasible(field: &GaloisField, n: usize, r: usize, designed: usize, budget: u64) -> bool {
    let b = budget as u128;
    enumeration_cost(field, n - r) <= b || mds_columns_cost(n, r) <= b || dependent_columns_cost(n, designed) <= b
}

#[allow(clippy::too_many_arguments)]
fn distance_check(
    cert: &mut VerificationCertificate,
    label: &str,
    field: &GaloisField,
    gen: &Matrix,
    h: &Matrix,
    code: &NegacyclicCode,
    budget: u64,
    expect_mds: bool,
) -> Result<DistanceReport> {
    let designed = code.designed_distance;
    let (n, r) = (h.cols(), h.rows());
    let rep = certify_distance(field, gen, h, designed, budget)?;
    let name = format!("{label}.distance");
    let method = method_name(rep.method);
    let exhaustive = rep.method != DistanceMethod::DesignedDistance;
    if !exhaustive && distance_feasible(field, n, r, designed, DEFAULT_BUDGET) {
        cert.record(
            &name,
            method,
            CheckStatus::Skipped,
            true,
            format!("an exhaustive check within the default budget was not run under budget {budget}"),
        );
        return Ok(rep);
    }
    let singleton = r + 1;
    let (ok, detail) = if exhaustive {
        let ok = rep.value >= designed && (!expect_mds || rep.value == singleton);
        (ok, format!("d = {} (designed {designed}, Singleton {singleton})", rep.value))
    } else {
        let ok = !expect_mds || rep.status == DistanceStatus::BoundCertified;
        let what = if rep.status == DistanceStatus::BoundCertified { "bound-certified" } else { "lower bound" };
        (ok, format!("d ≥ {} {what} (Singleton {singleton})", rep.value))
    };
    cert.check(&name, method, ok, true, detail);
    Ok(rep)
}

struct Block {
    label: &'static str,
    code: NegacyclicCode,
    gen: Matrix,
    h: Matrix,
    record: BlockCodeRecord,
}

/// Builds and verifies one instance over a prepared tower.
pub fn run_instance(tower: &Tower, layout: &Layout, budget: u64, depth: Depth) -> Result<FamilyInstance> {
    let Layout { family, q, i, n, .. } = *layout;
    if tower.q() != q {
        return Err(Error::InvalidParameter(format!("tower for q = {} used with q = {q}", tower.q())));
    }
    let small = tower.small();
    let beta = tower.primitive_2n_root(n)?;
    let mut cert = VerificationCertificate::new(family, q, i);
    let verify = depth == Depth::Verify;

    let lemma = if family.classical_base() == FamilyId::I { CosetLemma::HalfLength } else { CosetLemma::OddLength };
    let cosets = verify_coset_structure(q, lemma)?;
    cert.check(
        "coset_structure",
        "orbit enumeration against the closed form",
        cosets.pass,
        true,
        format!("{} cosets cover the odd residues mod {}", cosets.cosets_found, 2 * n),
    );

    let mut blocks = Vec::new();
    for (label, params) in [("C2", layout.c2), ("C1", layout.c1), ("C0", layout.c0)] {
        let code = build_bch_code(tower, n, params.b, params.delta, beta)?;
        let pc = default_parity_check(tower, &code)?;
        cert.check(
            &format!("{label}.parity_rank"),
            "row reduction of the expanded parity-check matrix",
            true,
            true,
            format!(
                "rank {} = |Z|; {} of {} expanded rows removed",
                pc.matrix.rows(),
                pc.removed_rows,
                pc.expanded_rows
            ),
        );
        let gen = generator_matrix(&code);
        let orthogonal = gen.mul_transpose(small, &pc.matrix)?.is_zero();
        cert.check(&format!("{label}.orthogonality"), "G·Hᵀ = 0", orthogonal, true, format!("k = {}", code.k));
        let record = BlockCodeRecord::new(label, small, &code, pc.expanded_rows, pc.removed_rows);
        blocks.push(Block { label, code, gen, h: pc.matrix, record });
    }

    let parts = [blocks[1].h.clone(), blocks[2].h.clone()];
    let rank_conditions = check_rank_conditions(small, &parts);
    cert.check(
        "rank_conditions",
        "ranks of H₀ = H_C1 and H₁ = H_C0",
        rank_conditions.pass,
        true,
        format!("κ = {}, ranks {:?}", rank_conditions.kappa, rank_conditions.ranks),
    );
    if !rank_conditions.pass {
        return Err(Error::InvalidParameter(format!(
            "rank conditions fail for family {family} at q = {q}, i = {i}: κ = {}, ranks {:?}",
            rank_conditions.kappa, rank_conditions.ranks
        )));
    }
    let g = split_and_pad(&parts)?;
    let v_code = ConvolutionalCode::new(small, g)?;
    let v = ConvParams { n: v_code.n, k: v_code.k, gamma: v_code.gamma, mu: v_code.mu };
    let expected = expected_classical(family, q, i);
    let dual_k = v.n - v.k;
    cert.check(
        "parameters",
        "row degrees and ranks of G(D)",
        (v.n, dual_k, v.gamma, v.mu) == (expected.n, expected.k, expected.gamma, expected.mu),
        true,
        format!(
            "V = ({}, {}, {}; {}), dual (n, k, γ; μ) = ({}, {dual_k}, {}; {})",
            v.n, v.k, v.gamma, v.mu, v.n, v.gamma, v.mu
        ),
    );

    if verify {
        let basic = verify_basic(small, &v_code.generator, budget);
        record_basic(&mut cert, "basic", basic.status, basic.minors_computed, budget);
        cert.check(
            "reduced",
            "leading row coefficients have full rank",
            is_reduced(small, &v_code.generator),
            true,
            format!("row degrees sum to γ = {}", v.gamma),
        );
    }

    // block distances
    let mut d = [0usize; 3];
    let mut pinned = [false; 3];
    for (idx, b) in blocks.iter_mut().enumerate() {
        if verify {
            let rep = distance_check(&mut cert, b.label, small, &b.gen, &b.h, &b.code, budget, idx < 2)?;
            d[idx] = rep.value;
            pinned[idx] = rep.is_pinned();
            b.record.distance = Some(rep);
        } else {
            d[idx] = b.code.designed_distance;
            pinned[idx] = b.code.designed_distance == b.code.singleton();
        }
    }
    let d2_upper = if pinned[0] { d[0] } else { blocks[0].code.singleton() };
    let (lo, _) = theorem_a_bracket(d[2], d[1], d[0]);
    let bracket = (lo, d2_upper);
    let any_bound = blocks.iter().any(|b| b.record.distance.as_ref().is_none_or(|r| r.status != DistanceStatus::Exact));
    let bracket_method =
        if any_bound { FreeDistanceMethod::BoundCertified } else { FreeDistanceMethod::TheoremABracket };
    let mut free_distance = FreeDistanceResult {
        lower: lo,
        upper: Some(d2_upper),
        method: bracket_method,
        weight_cap: None,
        states: None,
        edges: None,
    };
    cert.check(
        "theorem_a_bracket",
        if any_bound { "block distance bounds" } else { "exact block distances" },
        lo == d2_upper,
        true,
        format!("min(d₀ + d₁, d₂) = min({} + {}, {}) = {lo}, upper {d2_upper}", d[2], d[1], d[0]),
    );

    // dual code
    let mut dual = ClassicalParams { q, n: v.n, k: dual_k, gamma: v.gamma, mu: v.mu, d_f: lo };
    let mut dual_generator = None;
    let mut dual_cap = None;
    let mut dual_code = None;
    if verify {
        match dual_basis(tower, &v_code.generator, v.k) {
            Ok(db) => {
                let orth = cross_orthogonal(tower, &v_code.generator, &db.basis);
                cert.check(
                    "dual_orthogonality",
                    "shifted Hermitian products of G(D) against the dual basis",
                    orth,
                    true,
                    format!("degree cap {}", db.cap),
                );
                let code = ConvolutionalCode::new(small, db.basis.clone())?;
                cert.check(
                    "dual_parameters",
                    "minimal basis by degree",
                    (code.k, code.gamma, code.mu) == (expected.k, expected.gamma, expected.mu),
                    true,
                    format!("({}, {}, {}; {})", code.n, code.k, code.gamma, code.mu),
                );
                let basic = verify_basic(small, &code.generator, budget);
                record_basic(&mut cert, "dual_basic", basic.status, basic.minors_computed, budget);
                cert.check(
                    "dual_reduced",
                    "leading row coefficients have full rank",
                    is_reduced(small, &code.generator),
                    true,
                    format!("row degrees sum to γ = {}", code.gamma),
                );
                dual.k = code.k;
                dual.gamma = code.gamma;
                dual.mu = code.mu;
                dual_generator = Some(PolyMatrixRecord::new(small, &code.generator));
                dual_cap = Some(db.cap);
                dual_code = Some(code);
            }
            Err(e) => cert.check("dual_parameters", "minimal basis by degree", false, true, e.to_string()),
        }
    }

    let singleton = generalized_singleton(dual.n, dual.k, dual.gamma)?;
    if let Some(code) = &dual_code {
        let edges = trellis_edges(small, code);
        if edges <= budget as u128 {
            let res = free_distance_exact(small, code, 2 * singleton, budget)?;
            let agrees = res.exact().is_some_and(|x| x >= bracket.0 && x <= bracket.1);
            cert.check(
                "free_distance_search",
                "Dijkstra over the controller-canonical trellis",
                agrees,
                true,
                format!(
                    "d_f = {} over {} states, {edges} edges; bracket [{}, {}]",
                    res.exact().map_or_else(|| format!("> {}", 2 * singleton), |x| x.to_string()),
                    res.states.unwrap_or(0),
                    bracket.0,
                    bracket.1
                ),
            );
            free_distance = res;
        } else if edges <= DEFAULT_BUDGET as u128 {
            cert.record(
                "free_distance_search",
                "Dijkstra over the controller-canonical trellis",
                CheckStatus::Skipped,
                true,
                format!("{edges} trellis edges exceed budget {budget}"),
            );
        }
    }
    dual.d_f = free_distance.lower;
    let d_f_pinned = free_distance.exact().is_some();
    cert.check(
        "singleton_equality",
        "generalized Singleton bound of the dual",
        d_f_pinned && free_distance.lower == singleton,
        true,
        format!("d_f = {}, bound = {singleton}", free_distance.lower),
    );
    cert.check(
        "classical_parameters",
        "closed form of the family",
        dual == expected,
        true,
        format!("{dual} against {expected}"),
    );

    // Hermitian structure
    let containment = if verify || family.is_quantum() {
        let rep = hermitian_dual_containment(tower, &blocks[0].code)?;
        cert.check(
            "hermitian_containment",
            "defining set and explicit Hermitian dual basis",
            !family.is_quantum() || rep.contained(),
            family.is_quantum(),
            format!("C2^⊥h ⊆ C2: {}", rep.contained()),
        );
        if !family.is_quantum() {
            cert.note(if rep.contained() {
                "C2 contains its Hermitian dual; V is Hermitian self-orthogonal"
            } else {
                "classical-only instance: C2 does not contain its Hermitian dual"
            });
        }
        Some(rep)
    } else {
        None
    };
    let self_orthogonal = shifted_hermitian_orthogonal(tower, &v_code.generator);
    let mut quantum = None;
    if family.is_quantum() {
        cert.check(
            "shifted_self_orthogonality",
            "all row pairs and shifts |t| ≤ μ",
            self_orthogonal,
            true,
            format!("{} rows, shifts up to {}", v.k, v.mu),
        );
        let v_lower = purity_bound(&mut cert, small, &v_code, &blocks[0], &free_distance, budget, verify)?;
        let params = from_selforthogonal(q, &v_code, self_orthogonal, &free_distance, v_lower)?;
        let expected_q = expected_quantum(family, q, i).expect("quantum family");
        cert.check(
            "quantum_parameters",
            "classical-to-quantum map",
            (params.n, params.k, params.mu, params.gamma, params.d_f) == expected_q,
            true,
            params.tuple(),
        );
        cert.check(
            "quantum_singleton_equality",
            "quantum Singleton bound",
            params.mds,
            true,
            format!("d_f = {} ({:?}), purity {:?}", params.d_f, params.d_f_status, params.purity_note),
        );
        quantum = Some(params);
    }
    cert.note("parity-check rows use odd powers of β, the primitive 2n-th root of unity");

    Ok(FamilyInstance {
        family,
        q,
        i,
        n,
        field: small.spec().clone(),
        big_field: tower.big().spec().clone(),
        beta: tower.big().coords(beta),
        blocks: blocks.into_iter().map(|b| b.record).collect(),
        rank_conditions,
        v,
        v_generator: PolyMatrixRecord::new(small, &v_code.generator),
        dual,
        dual_generator,
        dual_cap,
        bracket,
        free_distance,
        containment,
        self_orthogonal,
        quantum,
        certificate: cert,
    })
}

fn record_basic(cert: &mut VerificationCertificate, name: &str, status: BasicStatus, minors: u64, budget: u64) {
    let method = "gcd of full-size minors";
    match status {
        BasicStatus::Verified => cert.check(name, method, true, true, format!("constant gcd after {minors} minors")),
        BasicStatus::NotBasic => {
            cert.check(name, method, false, true, format!("gcd not constant after {minors} minors"))
        }
        BasicStatus::Deferred => cert.record(
            name,
            method,
            CheckStatus::Skipped,
            budget_rule(budget),
            format!("minor budget {budget} exhausted; basicity rests on the rank conditions"),
        ),
    }
}

/// A lower bound on the free distance of `V`, from a trellis search when
/// affordable and otherwise from the distance of the Euclidean dual of `C₂`.
fn purity_bound(
    cert: &mut VerificationCertificate,
    field: &GaloisField,
    v: &ConvolutionalCode,
    c2: &Block,
    dual_df: &FreeDistanceResult,
    budget: u64,
    verify: bool,
) -> Result<Option<(usize, PurityNote)>> {
    let edges = trellis_edges(field, v);
    if verify && edges <= budget as u128 {
        let res = free_distance_exact(field, v, dual_df.lower, budget)?;
        cert.check(
            "purity",
            "trellis search on V up to the dual free distance",
            res.lower >= dual_df.lower,
            true,
            format!("d_f(V) ≥ {}", res.lower),
        );
        return Ok(Some((res.lower, PurityNote::VerifiedBySearch)));
    }
    if verify && edges <= DEFAULT_BUDGET as u128 {
        cert.record(
            "purity",
            "trellis search on V up to the dual free distance",
            CheckStatus::Skipped,
            true,
            format!("{edges} trellis edges exceed budget {budget}"),
        );
    }
    // an MDS block code has an MDS dual, so d(C2^⊥) = k2 + 1
    let c2_mds = match &c2.record.distance {
        Some(r) => r.is_pinned() && r.value == c2.code.singleton(),
        None => c2.code.designed_distance == c2.code.singleton(),
    };
    if c2_mds {
        let d_perp = c2.code.k + 1;
        cert.check(
            "purity",
            "free distance of V is at least the distance of C2^⊥",
            d_perp > dual_df.lower,
            false,
            format!("d_f(V) ≥ {d_perp}"),
        );
        return Ok(Some((d_perp, PurityNote::CertifiedByDualDistance)));
    }
    Ok(None)
}

fn instance(family: FamilyId, q: u64, i: u64, budget: u64, depth: Depth) -> Result<FamilyInstance> {
    let l = layout(family, q, i)?;
    let tower = Tower::new(q)?;
    run_instance(&tower, &l, budget, depth)
}

/// Construction and bookkeeping only.
pub fn build_instance(family: FamilyId, q: u64, i: u64) -> Result<FamilyInstance> {
    instance(family, q, i, DEFAULT_BUDGET, Depth::Build)
}

#[allow(non_snake_case)]
pub fn family_I(q: u64, i: u64, budget: u64) -> Result<FamilyInstance> {
    instance(FamilyId::I, q, i, budget, Depth::Verify)
}

#[allow(non_snake_case)]
pub fn family_II(q: u64, i: u64, budget: u64) -> Result<FamilyInstance> {
    instance(FamilyId::II, q, i, budget, Depth::Verify)
}

#[allow(non_snake_case)]
pub fn family_III(q: u64, i: u64, budget: u64) -> Result<FamilyInstance> {
    instance(FamilyId::III, q, i, budget, Depth::Verify)
}

#[allow(non_snake_case)]
pub fn family_IV(q: u64, i: u64, budget: u64) -> Result<FamilyInstance> {
    instance(FamilyId::IV, q, i, budget, Depth::Verify)
}

#[allow(non_snake_case)]
pub fn family_V(q: u64, i: u64, budget: u64) -> Result<FamilyInstance> {
    instance(FamilyId::V, q, i, budget, Depth::Verify)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::DfStatus;

    #[test]
    fn smallest_classical_instance() {
        let inst = family_II(3, 2, DEFAULT_BUDGET).unwrap();
        assert!(inst.certificate.pass, "{:#?}", inst.certificate.failures().collect::<Vec<_>>());
        assert_eq!(inst.dual.tuple(), "(5, 3, 2; 1, 5)");
        assert_eq!(inst.free_distance.exact(), Some(5));
    }

    #[test]
    fn smallest_quantum_instance() {
        let inst = family_IV(5, 2, DEFAULT_BUDGET).unwrap();
        assert!(inst.certificate.pass, "{:#?}", inst.certificate.failures().collect::<Vec<_>>());
        let qp = inst.quantum.unwrap();
        assert_eq!(qp.tuple(), "[(26, 20, 1; 2, 6)]_5");
        assert_eq!(qp.d_f_status, DfStatus::Exact);
    }

    #[test]
    fn low_budget_skips_mandatory_checks() {
        let inst = family_II(3, 2, 10).unwrap();
        assert!(!inst.certificate.pass);
        assert!(inst.certificate.checks.iter().any(|c| c.status == CheckStatus::Skipped && c.mandatory));
    }
}
