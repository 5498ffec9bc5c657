//! C interface to `polydendriform`.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free` function. Every call returns a
//! [`PdStatus`]; on failure the thread-local error is readable through
//! [`pd_last_error_kind`] and [`pd_last_error_message`]. Strings returned to
//! the caller are released with [`pd_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use polydendriform::constructs::{count_total, enumerate, validate};
use polydendriform::json::{
    construct_to_json, delegation_from_json, hypergraph_from_json, hypergraph_to_json, linear_to_json, parse_carrier,
};
use polydendriform::shuffle::{shuffle_with, QMode};
use polydendriform::{Construct, Delegation, Error, Hypergraph, LinearConstruct, Universe};

/// Outcome of a call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PdStatus {
    Ok = 0,
    /// Well-formed input violating a structural requirement.
    DomainError = 1,
    /// Input that could not be parsed.
    MalformedInput = 2,
    NullPointer = 3,
    /// A bug inside the library; the panic was caught at the boundary.
    Panic = 4,
}

pub struct PdHypergraph(Hypergraph);
pub struct PdConstruct(Construct);
pub struct PdDelegation(Delegation);
pub struct PdLinear(LinearConstruct);

struct LastError {
    kind: CString,
    message: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<LastError>> = const { RefCell::new(None) };
}

fn set_error(kind: &str, message: &str) {
    let clean = |s: &str| CString::new(s.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| {
        *e.borrow_mut() = Some(LastError {
            kind: clean(kind),
            message: clean(message),
        })
    });
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

enum Fail {
    Domain(Error),
    Malformed(String, String),
    Null(&'static str),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::UnknownUniverse(_) => Fail::Malformed(e.kind().into(), e.to_string()),
            e => Fail::Domain(e),
        }
    }
}

/// Runs `f`, translating errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> PdStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PdStatus::Ok,
        Ok(Err(Fail::Domain(e))) => {
            set_error(e.kind(), &e.to_string());
            PdStatus::DomainError
        }
        Ok(Err(Fail::Malformed(kind, msg))) => {
            set_error(&kind, &msg);
            PdStatus::MalformedInput
        }
        Ok(Err(Fail::Null(what))) => {
            set_error("NullPointer", &format!("{what} is null"));
            PdStatus::NullPointer
        }
        Err(_) => {
            set_error("Panic", "internal error");
            PdStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::Malformed("MalformedInput".into(), format!("{what} is not UTF-8")))
}

unsafe fn read_ref<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or(Fail::Null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &'static str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Null(what));
    }
    out.write(value);
    Ok(())
}

fn parse_json(s: &str) -> Result<serde_json::Value, Fail> {
    serde_json::from_str(s).map_err(|e| Fail::Malformed("MalformedInput".into(), format!("invalid JSON: {e}")))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior nul").into_raw()
}

/// Kind of the last error on this thread, or null if the last call succeeded.
#[no_mangle]
pub extern "C" fn pd_last_error_kind() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |x| x.kind.as_ptr()))
}

/// Message of the last error on this thread, or null. Valid until the next call.
#[no_mangle]
pub extern "C" fn pd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |x| x.message.as_ptr()))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn pd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The member of a universe (`"gamma:2"`, `"simplex"`, …) on a carrier
/// (`"1..5"`, `"1,3,5"`).
///
/// # Safety
/// Strings must be nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_universe_member(
    universe: *const c_char,
    carrier: *const c_char,
    out: *mut *mut PdHypergraph,
) -> PdStatus {
    guard(|| {
        let u: Universe = read_str(universe, "universe")?.parse()?;
        let x = parse_carrier(read_str(carrier, "carrier")?)?;
        let h = u.member(&x).ok_or_else(|| Error::NotInUniverse {
            universe: u.to_string(),
            carrier: x.to_string(),
        })?;
        write_out(out, Box::into_raw(Box::new(PdHypergraph(h))), "out")
    })
}

/// Reads a hypergraph from `{"vertices":[…],"hyperedges":[[…]…]}`.
///
/// # Safety
/// `json` must be nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_hypergraph_from_json(json: *const c_char, out: *mut *mut PdHypergraph) -> PdStatus {
    guard(|| {
        let h = hypergraph_from_json(&parse_json(read_str(json, "json")?)?)?;
        write_out(out, Box::into_raw(Box::new(PdHypergraph(h))), "out")
    })
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_hypergraph_to_json(h: *const PdHypergraph, out: *mut *mut c_char) -> PdStatus {
    guard(|| {
        let h = read_ref(h, "hypergraph")?;
        write_out(out, to_c_string(hypergraph_to_json(&h.0).to_string()), "out")
    })
}

/// # Safety
/// `h` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn pd_hypergraph_free(h: *mut PdHypergraph) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Number of faces, i.e. of constructs. Fails with `TooLarge` past 64 bits.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_count_constructs(h: *const PdHypergraph, out: *mut u64) -> PdStatus {
    guard(|| {
        let h = read_ref(h, "hypergraph")?;
        let n = count_total(&h.0)?;
        let n = u64::try_from(&n).map_err(|_| Error::TooLarge(format!("{n} constructs")))?;
        write_out(out, n, "out")
    })
}

/// All constructs as a JSON array of construct objects.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_enumerate_json(h: *const PdHypergraph, out: *mut *mut c_char) -> PdStatus {
    guard(|| {
        let h = read_ref(h, "hypergraph")?;
        let all: Vec<serde_json::Value> = enumerate(&h.0)?.iter().map(construct_to_json).collect();
        write_out(out, to_c_string(serde_json::Value::Array(all).to_string()), "out")
    })
}

/// Parses a construct in the compact notation, e.g. `"23(1,4)"`.
///
/// # Safety
/// `text` must be nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_construct_parse(text: *const c_char, out: *mut *mut PdConstruct) -> PdStatus {
    guard(|| {
        let c: Construct = read_str(text, "text")?.parse()?;
        write_out(out, Box::into_raw(Box::new(PdConstruct(c))), "out")
    })
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_construct_to_string(c: *const PdConstruct, out: *mut *mut c_char) -> PdStatus {
    guard(|| {
        let c = read_ref(c, "construct")?;
        write_out(out, to_c_string(c.0.to_string()), "out")
    })
}

/// Writes whether `c` is a construct of `h`. An invalid construct is not an
/// error; the reason is left in the last-error message.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_construct_validate(h: *const PdHypergraph, c: *const PdConstruct, out: *mut bool) -> PdStatus {
    let mut reason = None;
    let status = guard(|| {
        let (h, c) = (read_ref(h, "hypergraph")?, read_ref(c, "construct")?);
        let verdict = validate(&h.0, &c.0);
        let ok = verdict.is_ok();
        reason = verdict.err();
        write_out(out, ok, "out")
    });
    if let Some(e) = reason {
        set_error(e.kind(), &e.to_string());
    }
    status
}

/// # Safety
/// `c` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn pd_construct_free(c: *mut PdConstruct) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Reads a delegation from
/// `{"universe":tag,"parts":[construct…],"whole":[…],"mode":"strict"|"semistrict"}`.
///
/// # Safety
/// `json` must be nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_delegation_from_json(json: *const c_char, out: *mut *mut PdDelegation) -> PdStatus {
    guard(|| {
        let d = delegation_from_json(&parse_json(read_str(json, "json")?)?)?;
        write_out(out, Box::into_raw(Box::new(PdDelegation(d))), "out")
    })
}

/// # Safety
/// `d` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn pd_delegation_free(d: *mut PdDelegation) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// The product of a delegation. With `substitute_q` false, strict teams keep
/// `q` formal and semi-strict ones use `q = -1`; otherwise `q = q_value`.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_shuffle(
    d: *const PdDelegation,
    substitute_q: bool,
    q_value: i64,
    out: *mut *mut PdLinear,
) -> PdStatus {
    guard(|| {
        let d = read_ref(d, "delegation")?;
        let q = if substitute_q {
            QMode::At(q_value)
        } else {
            QMode::default_for(d.0.team().mode())
        };
        let l = shuffle_with(&d.0, q)?;
        write_out(out, Box::into_raw(Box::new(PdLinear(l))), "out")
    })
}

/// Number of terms of a linear construct.
///
/// # Safety
/// `l` must be a live handle or null (giving 0).
#[no_mangle]
pub unsafe extern "C" fn pd_linear_len(l: *const PdLinear) -> usize {
    l.as_ref().map_or(0, |l| l.0.len())
}

/// `[{"construct":…,"coeff":{"exponent":k,…}}…]`.
///
/// # Safety
/// `l` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_linear_to_json(l: *const PdLinear, out: *mut *mut c_char) -> PdStatus {
    guard(|| {
        let l = read_ref(l, "linear construct")?;
        write_out(out, to_c_string(linear_to_json(&l.0).to_string()), "out")
    })
}

/// Human-readable form such as `2(1(3(4))) + q 23(1,4)`.
///
/// # Safety
/// `l` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_linear_to_string(l: *const PdLinear, out: *mut *mut c_char) -> PdStatus {
    guard(|| {
        let l = read_ref(l, "linear construct")?;
        write_out(out, to_c_string(l.0.to_string()), "out")
    })
}

/// # Safety
/// `l` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn pd_linear_free(l: *mut PdLinear) {
    if !l.is_null() {
        drop(Box::from_raw(l));
    }
}
