//! C ABI over the neutroval library.
//!
//! Conventions:
//! - every fallible call returns an [`NvStatus`] and writes its result
//!   through an out-pointer, which is left untouched on failure;
//! - value types are flat structs of doubles with the library's component
//!   order;
//! - the tolerance policy is an opaque handle created with
//!   [`nv_tolerance_new`] and released with [`nv_tolerance_free`]; passing
//!   NULL wherever a `const NvTolerance*` is expected selects the default
//!   policy;
//! - transform variants are selected with the integers 1 and 2
//!   ([`NV_VARIANT_ONE`], [`NV_VARIANT_TWO`]); logic values use the codes
//!   of [`NvLogicValue`].

use std::os::raw::c_char;

use neutroval::algebra5::{
    complement_primary, complement_vec, dual_primary, dual_vec, equivalence_vec, intersection_vec,
    negation_primary, negation_vec, s_implication_vec, union_vec,
};
use neutroval::logic5::{
    complement_sym, dual_sym, equivalence_sym, intersection_sym, negation_sym, s_implication_sym,
    union_sym, LogicValue5, VALUES,
};
use neutroval::penta::{from_penta, ten_term_decomposition, to_penta};
use neutroval::{
    bipolar, hexa, Error, HexaVector, NeutroTriple, PentaVector, TolerancePolicy, Variant,
};

/// Variant selector for the penta and hexa transforms.
pub const NV_VARIANT_ONE: i32 = 1;
/// Variant selector for the penta and hexa transforms.
pub const NV_VARIANT_TWO: i32 = 2;

/// Result code of a fallible call.
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NvStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// A variant or logic-value code was out of range.
    InvalidArgument = 2,
    /// A component lies outside [0, 1] beyond tolerance.
    OutOfRange = 3,
    /// Partition components do not sum to 1 within tolerance.
    PartitionViolation = 4,
    /// An inverse-transform radicand was negative beyond tolerance.
    DiscriminantNegative = 5,
    /// Mutually exclusive components are simultaneously nonzero.
    ExclusivityViolation = 6,
    /// A vector operator input fails its property-block precondition.
    PreconditionViolation = 7,
    /// An ambiguity fold did not land on a valid partition.
    ConsistencyViolation = 8,
}

impl From<Error> for NvStatus {
    fn from(e: Error) -> Self {
        match e {
            Error::OutOfRange { .. } => NvStatus::OutOfRange,
            Error::PartitionViolation { .. } => NvStatus::PartitionViolation,
            Error::DiscriminantNegative { .. } => NvStatus::DiscriminantNegative,
            Error::ExclusivityViolation { .. } => NvStatus::ExclusivityViolation,
            Error::PreconditionViolation { .. } => NvStatus::PreconditionViolation,
            Error::ConsistencyViolation { .. } => NvStatus::ConsistencyViolation,
        }
    }
}

/// One of the five logical values.
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NvLogicValue {
    True = 0,
    Contradictory = 1,
    Hesitant = 2,
    Unknown = 3,
    False = 4,
}

impl From<LogicValue5> for NvLogicValue {
    fn from(v: LogicValue5) -> Self {
        match v {
            LogicValue5::True => NvLogicValue::True,
            LogicValue5::Contradictory => NvLogicValue::Contradictory,
            LogicValue5::Hesitant => NvLogicValue::Hesitant,
            LogicValue5::Unknown => NvLogicValue::Unknown,
            LogicValue5::False => NvLogicValue::False,
        }
    }
}

/// Primary triple: degree of truth, indeterminacy, falsity.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NvTriple {
    pub mu: f64,
    pub omega: f64,
    pub nu: f64,
}

/// Five-component partition over true, contradictory, hesitant, unknown,
/// false.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NvPenta {
    pub t: f64,
    pub c: f64,
    pub h: f64,
    pub u: f64,
    pub f: f64,
}

/// Six-component partition: the penta components plus ambiguity.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NvHexa {
    pub t: f64,
    pub c: f64,
    pub h: f64,
    pub u: f64,
    pub f: f64,
    pub a: f64,
}

/// Bipolar decomposition of a truth/falsity pair.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NvBipolar {
    pub tau_plus: f64,
    pub tau_minus: f64,
    pub alpha: f64,
    pub pi: f64,
    pub kappa: f64,
}

/// Ten-term inspection decomposition (upper-square terms first).
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NvTenTerm {
    pub weak_true: f64,
    pub weak_false: f64,
    pub neutral: f64,
    pub saturated: f64,
    pub hesitant_part: f64,
    pub true_part: f64,
    pub false_part: f64,
    pub unknown_part: f64,
    pub contradictory_part: f64,
    pub ambiguous_part: f64,
}

/// Opaque tolerance policy handle.
pub struct NvTolerance(TolerancePolicy);

fn triple_out(x: NeutroTriple) -> NvTriple {
    NvTriple {
        mu: x.mu(),
        omega: x.omega(),
        nu: x.nu(),
    }
}

fn penta_out(p: PentaVector) -> NvPenta {
    NvPenta {
        t: p.t(),
        c: p.c(),
        h: p.h(),
        u: p.u(),
        f: p.f(),
    }
}

fn hexa_out(x: HexaVector) -> NvHexa {
    NvHexa {
        t: x.t(),
        c: x.c(),
        h: x.h(),
        u: x.u(),
        f: x.f(),
        a: x.a(),
    }
}

unsafe fn tolerance_from(ptr: *const NvTolerance) -> TolerancePolicy {
    if ptr.is_null() {
        TolerancePolicy::default()
    } else {
        (*ptr).0
    }
}

fn variant_from(code: i32) -> Option<Variant> {
    match code {
        NV_VARIANT_ONE => Some(Variant::I),
        NV_VARIANT_TWO => Some(Variant::II),
        _ => None,
    }
}

fn logic_from(code: i32) -> Option<LogicValue5> {
    VALUES.into_iter().find(|&v| v as i32 == code)
}

/// Creates a tolerance policy handle. Returns NULL when any tolerance is
/// not a strictly positive finite number. Release with
/// [`nv_tolerance_free`].
#[no_mangle]
pub extern "C" fn nv_tolerance_new(
    eps_partition: f64,
    eps_zero: f64,
    eps_roundtrip: f64,
) -> *mut NvTolerance {
    for eps in [eps_partition, eps_zero, eps_roundtrip] {
        if !(eps > 0.0 && eps.is_finite()) {
            return std::ptr::null_mut();
        }
    }
    Box::into_raw(Box::new(NvTolerance(TolerancePolicy::new(
        eps_partition,
        eps_zero,
        eps_roundtrip,
    ))))
}

/// Creates a handle carrying the default tolerance policy.
#[no_mangle]
pub extern "C" fn nv_tolerance_default() -> *mut NvTolerance {
    Box::into_raw(Box::new(NvTolerance(TolerancePolicy::default())))
}

/// Releases a handle returned by [`nv_tolerance_new`] or
/// [`nv_tolerance_default`]. NULL is ignored.
///
/// # Safety
/// `tol` must be a pointer previously returned by this library and not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn nv_tolerance_free(tol: *mut NvTolerance) {
    if !tol.is_null() {
        drop(Box::from_raw(tol));
    }
}

/// Validates raw components into a triple, clamping values within the zero
/// tolerance of the unit interval.
///
/// # Safety
/// `out` must point to writable memory for one `NvTriple`; `tol` must be
/// NULL or a live tolerance handle.
#[no_mangle]
pub unsafe extern "C" fn nv_validate_triple(
    mu: f64,
    omega: f64,
    nu: f64,
    tol: *const NvTolerance,
    out: *mut NvTriple,
) -> NvStatus {
    if out.is_null() {
        return NvStatus::NullPointer;
    }
    match NeutroTriple::new(mu, omega, nu, &tolerance_from(tol)) {
        Ok(x) => {
            *out = triple_out(x);
            NvStatus::Ok
        }
        Err(e) => e.into(),
    }
}

/// Validates raw components as a penta partition of unity.
///
/// # Safety
/// As [`nv_validate_triple`], with `out` sized for one `NvPenta`.
#[no_mangle]
pub unsafe extern "C" fn nv_validate_penta(
    t: f64,
    c: f64,
    h: f64,
    u: f64,
    f: f64,
    tol: *const NvTolerance,
    out: *mut NvPenta,
) -> NvStatus {
    if out.is_null() {
        return NvStatus::NullPointer;
    }
    match PentaVector::new(t, c, h, u, f, &tolerance_from(tol)) {
        Ok(p) => {
            *out = penta_out(p);
            NvStatus::Ok
        }
        Err(e) => e.into(),
    }
}

/// Validates raw components as a hexa partition of unity.
///
/// # Safety
/// As [`nv_validate_triple`], with `out` sized for one `NvHexa`.
#[no_mangle]
pub unsafe extern "C" fn nv_validate_hexa(
    t: f64,
    c: f64,
    h: f64,
    u: f64,
    f: f64,
    a: f64,
    tol: *const NvTolerance,
    out: *mut NvHexa,
) -> NvStatus {
    if out.is_null() {
        return NvStatus::NullPointer;
    }
    match HexaVector::new(t, c, h, u, f, a, &tolerance_from(tol)) {
        Ok(x) => {
            *out = hexa_out(x);
            NvStatus::Ok
        }
        Err(e) => e.into(),
    }
}

unsafe fn read_triple(x: *const NvTriple, tol: &TolerancePolicy) -> Result<NeutroTriple, NvStatus> {
    if x.is_null() {
        return Err(NvStatus::NullPointer);
    }
    NeutroTriple::new((*x).mu, (*x).omega, (*x).nu, tol).map_err(NvStatus::from)
}

unsafe fn read_penta(p: *const NvPenta, tol: &TolerancePolicy) -> Result<PentaVector, NvStatus> {
    if p.is_null() {
        return Err(NvStatus::NullPointer);
    }
    PentaVector::new((*p).t, (*p).c, (*p).h, (*p).u, (*p).f, tol).map_err(NvStatus::from)
}

unsafe fn read_hexa(x: *const NvHexa, tol: &TolerancePolicy) -> Result<HexaVector, NvStatus> {
    if x.is_null() {
        return Err(NvStatus::NullPointer);
    }
    HexaVector::new((*x).t, (*x).c, (*x).h, (*x).u, (*x).f, (*x).a, tol).map_err(NvStatus::from)
}

/// Bipolar decomposition of `(mu, nu)` into net truth, net falsity,
/// ambiguity, ignorance, and contradiction.
///
/// # Safety
/// `out` must point to writable memory for one `NvBipolar`.
#[no_mangle]
pub unsafe extern "C" fn nv_bipolar_decompose(mu: f64, nu: f64, out: *mut NvBipolar) -> NvStatus {
    if out.is_null() {
        return NvStatus::NullPointer;
    }
    if !((0.0..=1.0).contains(&mu) && (0.0..=1.0).contains(&nu)) {
        return NvStatus::OutOfRange;
    }
    let b = bipolar::decompose(mu, nu);
    *out = NvBipolar {
        tau_plus: b.tau_plus(),
        tau_minus: b.tau_minus(),
        alpha: b.alpha(),
        pi: b.pi(),
        kappa: b.kappa(),
    };
    NvStatus::Ok
}

/// The four Belnap-aligned terms `(mu - kappa, nu - kappa, pi, kappa)`.
///
/// # Safety
/// `out` must point to writable memory for four doubles.
#[no_mangle]
pub unsafe extern "C" fn nv_bipolar_tetra(mu: f64, nu: f64, out: *mut f64) -> NvStatus {
    if out.is_null() {
        return NvStatus::NullPointer;
    }
    if !((0.0..=1.0).contains(&mu) && (0.0..=1.0).contains(&nu)) {
        return NvStatus::OutOfRange;
    }
    let terms = bipolar::tetra_partition(mu, nu);
    std::ptr::copy_nonoverlapping(terms.as_ptr(), out, 4);
    NvStatus::Ok
}

/// Forward penta transform. `variant` is 1 or 2.
///
/// # Safety
/// `x` must point to a readable `NvTriple` and `out` to a writable
/// `NvPenta`; `tol` must be NULL or a live tolerance handle.
#[no_mangle]
pub unsafe extern "C" fn nv_to_penta(
    x: *const NvTriple,
    variant: i32,
    tol: *const NvTolerance,
    out: *mut NvPenta,
) -> NvStatus {
    if out.is_null() {
        return NvStatus::NullPointer;
    }
    let Some(v) = variant_from(variant) else {
        return NvStatus::InvalidArgument;
    };
    let tol = tolerance_from(tol);
    match read_triple(x, &tol) {
        Ok(triple) => {
            *out = penta_out(to_penta(triple, v));
            NvStatus::Ok
        }
        Err(status) => status,
    }
}

/// Inverse penta transform back to the primary triple.
///
/// # Safety
/// `p` must point to a readable `NvPenta` and `out` to a writable
/// `NvTriple`; `tol` must be NULL or a live tolerance handle.
#[no_mangle]
pub unsafe extern "C" fn nv_from_penta(
    p: *const NvPenta,
    variant: i32,
    tol: *const NvTolerance,
    out: *mut NvTriple,
) -> NvStatus {
    if out.is_null() {
        return NvStatus::NullPointer;
    }
    let Some(v) = variant_from(variant) else {
        return NvStatus::InvalidArgument;
    };
    let tol = tolerance_from(tol);
    match read_penta(p, &tol).and_then(|vec| from_penta(vec, v, &tol).map_err(NvStatus::from)) {
        Ok(triple) => {
            *out = triple_out(triple);
            NvStatus::Ok
        }
        Err(status) => status,
    }
}

/// Forward hexa transform. `variant` is 1 or 2.
///
/// # Safety
/// `x` must point to a readable `NvTriple` and `out` to a writable
/// `NvHexa`; `tol` must be NULL or a live tolerance handle.
#[no_mangle]
pub unsafe extern "C" fn nv_to_hexa(
    x: *const NvTriple,
    variant: i32,
    tol: *const NvTolerance,
    out: *mut NvHexa,
) -> NvStatus {
    if out.is_null() {
        return NvStatus::NullPointer;
    }
    let Some(v) = variant_from(variant) else {
        return NvStatus::InvalidArgument;
    };
    let tol = tolerance_from(tol);
    match read_triple(x, &tol) {
        Ok(triple) => {
            *out = hexa_out(hexa::to_hexa(triple, v));
            NvStatus::Ok
        }
        Err(status) => status,
    }
}

/// Folds the ambiguity of a hexa vector back into a penta vector.
///
/// # Safety
/// `x` must point to a readable `NvHexa` and `out` to a writable
/// `NvPenta`; `tol` must be NULL or a live tolerance handle.
#[no_mangle]
pub unsafe extern "C" fn nv_hexa_fold_penta(
    x: *const NvHexa,
    variant: i32,
    tol: *const NvTolerance,
    out: *mut NvPenta,
) -> NvStatus {
    if out.is_null() {
        return NvStatus::NullPointer;
    }
    let Some(v) = variant_from(variant) else {
        return NvStatus::InvalidArgument;
    };
    let tol = tolerance_from(tol);
    match read_hexa(x, &tol)
        .and_then(|vec| hexa::penta_of_hexa(&vec, v, &tol).map_err(NvStatus::from))
    {
        Ok(p) => {
            *out = penta_out(p);
            NvStatus::Ok
        }
        Err(status) => status,
    }
}

/// Ten-term inspection decomposition of a triple.
///
/// # Safety
/// `x` must point to a readable `NvTriple` and `out` to a writable
/// `NvTenTerm`; `tol` must be NULL or a live tolerance handle.
#[no_mangle]
pub unsafe extern "C" fn nv_ten_term(
    x: *const NvTriple,
    tol: *const NvTolerance,
    out: *mut NvTenTerm,
) -> NvStatus {
    if out.is_null() {
        return NvStatus::NullPointer;
    }
    let tol = tolerance_from(tol);
    match read_triple(x, &tol) {
        Ok(triple) => {
            let d = ten_term_decomposition(triple);
            *out = NvTenTerm {
                weak_true: d.weak_true,
                weak_false: d.weak_false,
                neutral: d.neutral,
                saturated: d.saturated,
                hesitant_part: d.hesitant_part,
                true_part: d.true_part,
                false_part: d.false_part,
                unknown_part: d.unknown_part,
                contradictory_part: d.contradictory_part,
                ambiguous_part: d.ambiguous_part,
            };
            NvStatus::Ok
        }
        Err(status) => status,
    }
}

type BinaryVecOp =
    fn(&PentaVector, &PentaVector, &TolerancePolicy) -> neutroval::Result<PentaVector>;

unsafe fn binary_vec(
    a: *const NvPenta,
    b: *const NvPenta,
    tol: *const NvTolerance,
    out: *mut NvPenta,
    op: BinaryVecOp,
) -> NvStatus {
    if out.is_null() {
        return NvStatus::NullPointer;
    }
    let tol = tolerance_from(tol);
    let lhs = match read_penta(a, &tol) {
        Ok(v) => v,
        Err(status) => return status,
    };
    let rhs = match read_penta(b, &tol) {
        Ok(v) => v,
        Err(status) => return status,
    };
    match op(&lhs, &rhs, &tol) {
        Ok(v) => {
            *out = penta_out(v);
            NvStatus::Ok
        }
        Err(e) => e.into(),
    }
}

/// Vector union. Operands must satisfy `c * u = 0` and the
/// `t + c + u + f <= 1` bound.
///
/// # Safety
/// `a` and `b` must point to readable `NvPenta` values and `out` to a
/// writable one; `tol` must be NULL or a live tolerance handle.
#[no_mangle]
pub unsafe extern "C" fn nv_penta_union(
    a: *const NvPenta,
    b: *const NvPenta,
    tol: *const NvTolerance,
    out: *mut NvPenta,
) -> NvStatus {
    binary_vec(a, b, tol, out, union_vec)
}

/// Vector intersection; see [`nv_penta_union`] for preconditions.
///
/// # Safety
/// As [`nv_penta_union`].
#[no_mangle]
pub unsafe extern "C" fn nv_penta_intersection(
    a: *const NvPenta,
    b: *const NvPenta,
    tol: *const NvTolerance,
    out: *mut NvPenta,
) -> NvStatus {
    binary_vec(a, b, tol, out, intersection_vec)
}

/// Vector equivalence, composed as `(not a or b) and (a or not b)`.
///
/// # Safety
/// As [`nv_penta_union`].
#[no_mangle]
pub unsafe extern "C" fn nv_penta_equivalence(
    a: *const NvPenta,
    b: *const NvPenta,
    tol: *const NvTolerance,
    out: *mut NvPenta,
) -> NvStatus {
    binary_vec(a, b, tol, out, equivalence_vec)
}

/// Vector S-implication, composed as `not a or b`.
///
/// # Safety
/// As [`nv_penta_union`].
#[no_mangle]
pub unsafe extern "C" fn nv_penta_implication(
    a: *const NvPenta,
    b: *const NvPenta,
    tol: *const NvTolerance,
    out: *mut NvPenta,
) -> NvStatus {
    binary_vec(a, b, tol, out, s_implication_vec)
}

unsafe fn unary_vec(
    x: *const NvPenta,
    tol: *const NvTolerance,
    out: *mut NvPenta,
    op: fn(&PentaVector) -> PentaVector,
) -> NvStatus {
    if out.is_null() {
        return NvStatus::NullPointer;
    }
    let tol = tolerance_from(tol);
    match read_penta(x, &tol) {
        Ok(v) => {
            *out = penta_out(op(&v));
            NvStatus::Ok
        }
        Err(status) => status,
    }
}

/// Vector complement: swaps t and f.
///
/// # Safety
/// `x` must point to a readable `NvPenta` and `out` to a writable one.
#[no_mangle]
pub unsafe extern "C" fn nv_penta_complement(
    x: *const NvPenta,
    tol: *const NvTolerance,
    out: *mut NvPenta,
) -> NvStatus {
    unary_vec(x, tol, out, complement_vec)
}

/// Vector negation: swaps t with f and c with u.
///
/// # Safety
/// As [`nv_penta_complement`].
#[no_mangle]
pub unsafe extern "C" fn nv_penta_negation(
    x: *const NvPenta,
    tol: *const NvTolerance,
    out: *mut NvPenta,
) -> NvStatus {
    unary_vec(x, tol, out, negation_vec)
}

/// Vector dual: swaps c and u.
///
/// # Safety
/// As [`nv_penta_complement`].
#[no_mangle]
pub unsafe extern "C" fn nv_penta_dual(
    x: *const NvPenta,
    tol: *const NvTolerance,
    out: *mut NvPenta,
) -> NvStatus {
    unary_vec(x, tol, out, dual_vec)
}

unsafe fn unary_triple(
    x: *const NvTriple,
    tol: *const NvTolerance,
    out: *mut NvTriple,
    op: fn(NeutroTriple) -> NeutroTriple,
) -> NvStatus {
    if out.is_null() {
        return NvStatus::NullPointer;
    }
    let tol = tolerance_from(tol);
    match read_triple(x, &tol) {
        Ok(v) => {
            *out = triple_out(op(v));
            NvStatus::Ok
        }
        Err(status) => status,
    }
}

/// Primary complement `(mu, omega, nu) -> (nu, omega, mu)`.
///
/// # Safety
/// `x` must point to a readable `NvTriple` and `out` to a writable one.
#[no_mangle]
pub unsafe extern "C" fn nv_triple_complement(
    x: *const NvTriple,
    tol: *const NvTolerance,
    out: *mut NvTriple,
) -> NvStatus {
    unary_triple(x, tol, out, complement_primary)
}

/// Primary negation `(mu, omega, nu) -> (1 - mu, omega, 1 - nu)`.
///
/// # Safety
/// As [`nv_triple_complement`].
#[no_mangle]
pub unsafe extern "C" fn nv_triple_negation(
    x: *const NvTriple,
    tol: *const NvTolerance,
    out: *mut NvTriple,
) -> NvStatus {
    unary_triple(x, tol, out, negation_primary)
}

/// Primary dual `(mu, omega, nu) -> (1 - nu, omega, 1 - mu)`.
///
/// # Safety
/// As [`nv_triple_complement`].
#[no_mangle]
pub unsafe extern "C" fn nv_triple_dual(
    x: *const NvTriple,
    tol: *const NvTolerance,
    out: *mut NvTriple,
) -> NvStatus {
    unary_triple(x, tol, out, dual_primary)
}

unsafe fn binary_logic(
    x: i32,
    y: i32,
    out: *mut NvLogicValue,
    op: fn(LogicValue5, LogicValue5) -> LogicValue5,
) -> NvStatus {
    if out.is_null() {
        return NvStatus::NullPointer;
    }
    match (logic_from(x), logic_from(y)) {
        (Some(a), Some(b)) => {
            *out = op(a, b).into();
            NvStatus::Ok
        }
        _ => NvStatus::InvalidArgument,
    }
}

unsafe fn unary_logic(
    x: i32,
    out: *mut NvLogicValue,
    op: fn(LogicValue5) -> LogicValue5,
) -> NvStatus {
    if out.is_null() {
        return NvStatus::NullPointer;
    }
    match logic_from(x) {
        Some(a) => {
            *out = op(a).into();
            NvStatus::Ok
        }
        None => NvStatus::InvalidArgument,
    }
}

/// Symbolic union over [`NvLogicValue`] codes.
///
/// # Safety
/// `out` must point to writable memory for one `NvLogicValue`.
#[no_mangle]
pub unsafe extern "C" fn nv_logic_union(x: i32, y: i32, out: *mut NvLogicValue) -> NvStatus {
    binary_logic(x, y, out, union_sym)
}

/// Symbolic intersection over [`NvLogicValue`] codes.
///
/// # Safety
/// As [`nv_logic_union`].
#[no_mangle]
pub unsafe extern "C" fn nv_logic_intersection(x: i32, y: i32, out: *mut NvLogicValue) -> NvStatus {
    binary_logic(x, y, out, intersection_sym)
}

/// Symbolic equivalence over [`NvLogicValue`] codes.
///
/// # Safety
/// As [`nv_logic_union`].
#[no_mangle]
pub unsafe extern "C" fn nv_logic_equivalence(x: i32, y: i32, out: *mut NvLogicValue) -> NvStatus {
    binary_logic(x, y, out, equivalence_sym)
}

/// Symbolic S-implication over [`NvLogicValue`] codes.
///
/// # Safety
/// As [`nv_logic_union`].
#[no_mangle]
pub unsafe extern "C" fn nv_logic_implication(x: i32, y: i32, out: *mut NvLogicValue) -> NvStatus {
    binary_logic(x, y, out, s_implication_sym)
}

/// Symbolic complement.
///
/// # Safety
/// As [`nv_logic_union`].
#[no_mangle]
pub unsafe extern "C" fn nv_logic_complement(x: i32, out: *mut NvLogicValue) -> NvStatus {
    unary_logic(x, out, complement_sym)
}

/// Symbolic negation.
///
/// # Safety
/// As [`nv_logic_union`].
#[no_mangle]
pub unsafe extern "C" fn nv_logic_negation(x: i32, out: *mut NvLogicValue) -> NvStatus {
    unary_logic(x, out, negation_sym)
}

/// Symbolic dual.
///
/// # Safety
/// As [`nv_logic_union`].
#[no_mangle]
pub unsafe extern "C" fn nv_logic_dual(x: i32, out: *mut NvLogicValue) -> NvStatus {
    unary_logic(x, out, dual_sym)
}

/// Static name of a status code, for diagnostics. Never freed by the
/// caller.
#[no_mangle]
pub extern "C" fn nv_status_name(status: NvStatus) -> *const c_char {
    let name: &'static [u8] = match status {
        NvStatus::Ok => b"Ok\0",
        NvStatus::NullPointer => b"NullPointer\0",
        NvStatus::InvalidArgument => b"InvalidArgument\0",
        NvStatus::OutOfRange => b"OutOfRange\0",
        NvStatus::PartitionViolation => b"PartitionViolation\0",
        NvStatus::DiscriminantNegative => b"DiscriminantNegative\0",
        NvStatus::ExclusivityViolation => b"ExclusivityViolation\0",
        NvStatus::PreconditionViolation => b"PreconditionViolation\0",
        NvStatus::ConsistencyViolation => b"ConsistencyViolation\0",
    };
    name.as_ptr().cast()
}
