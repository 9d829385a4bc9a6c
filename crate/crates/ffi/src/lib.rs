//! C ABI for halinkit.
//!
//! Graphs and groups cross the boundary as opaque handles owned by the
//! caller and released with their `_free` function. Every fallible call
//! returns an [`HkStatus`]; on failure [`hk_last_error_message`] describes
//! the error. Strings returned through out-parameters are released with
//! [`hk_string_free`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::collections::BTreeSet;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use halinkit::aut::automorphism_group;
use halinkit::graph::{encode_graph6, generate, parse_graph6, Family};
use halinkit::invariants::{self, Budget};
use halinkit::{Error, Graph, PermGroup};

pub const HK_ABI_VERSION: u32 = 1;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed graph, point or permutation.
    Input = 3,
    /// A documented precondition does not hold.
    Precondition = 4,
    /// Search budget or truncation depth ran out.
    Exhausted = 5,
    /// Internal panic caught at the boundary.
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HkFamily {
    Path = 0,
    Cycle = 1,
    Complete = 2,
    CompleteBipartite = 3,
    Petersen = 4,
    BinaryTree = 5,
    Comb = 6,
}

/// Opaque graph handle.
pub struct HkGraph {
    inner: Graph,
}

/// Opaque permutation group handle.
pub struct HkGroup {
    inner: PermGroup,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: HkStatus, msg: &str) -> HkStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> HkStatus {
    let status = match e {
        Error::Parse(_) | Error::DegreeMismatch { .. } | Error::PointOutOfRange { .. } | Error::NotAPermutation(_) => {
            HkStatus::Input
        }
        Error::Precondition(_) | Error::MotionUndefined | Error::TooLarge { .. } => HkStatus::Precondition,
        Error::BudgetExhausted { .. } | Error::Exhausted { .. } => HkStatus::Exhausted,
    };
    fail(status, &e.to_string())
}

/// Runs `f`, turning panics into [`HkStatus::Panic`].
fn guard(f: impl FnOnce() -> HkStatus) -> HkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(HkStatus::Panic, "internal panic"),
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, HkStatus> {
    if s.is_null() {
        return Err(fail(HkStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(HkStatus::InvalidUtf8, "string is not UTF-8"))
}

unsafe fn read_set(points: *const usize, len: usize) -> Result<BTreeSet<usize>, HkStatus> {
    if len == 0 {
        return Ok(BTreeSet::new());
    }
    if points.is_null() {
        return Err(fail(HkStatus::NullPointer, "null point array"));
    }
    Ok(std::slice::from_raw_parts(points, len).iter().copied().collect())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> HkStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            HkStatus::Ok
        }
        Err(_) => fail(HkStatus::Panic, "output contains a nul byte"),
    }
}

macro_rules! non_null {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            return fail(HkStatus::NullPointer, concat!("null argument `", stringify!($p), "`"));
        })+
    };
}

#[no_mangle]
pub extern "C" fn hk_abi_version() -> u32 {
    HK_ABI_VERSION
}

/// Message for the last failed call on this thread. Valid until the next
/// failing call on the same thread; never null.
#[no_mangle]
pub extern "C" fn hk_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn hk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[no_mangle]
pub unsafe extern "C" fn hk_graph_from_graph6(text: *const c_char, out: *mut *mut HkGraph) -> HkStatus {
    guard(|| {
        non_null!(out);
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_graph6(text) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(HkGraph { inner: g }));
                HkStatus::Ok
            }
            Err(e) => from_error(e.into()),
        }
    })
}

/// Builds a named family. `a` is the vertex count (or first part, or depth),
/// `b` the second part of a complete bipartite graph; unused sizes are ignored.
#[no_mangle]
pub unsafe extern "C" fn hk_graph_from_family(
    family: HkFamily,
    a: usize,
    b: usize,
    out: *mut *mut HkGraph,
) -> HkStatus {
    guard(|| {
        non_null!(out);
        let f = match family {
            HkFamily::Path => Family::Path(a),
            HkFamily::Cycle => Family::Cycle(a),
            HkFamily::Complete => Family::Complete(a),
            HkFamily::CompleteBipartite => Family::CompleteBipartite(a, b),
            HkFamily::Petersen => Family::Petersen,
            HkFamily::BinaryTree => Family::BinaryTree(a),
            HkFamily::Comb => Family::Comb(a),
        };
        match generate(f) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(HkGraph { inner: g }));
                HkStatus::Ok
            }
            Err(e) => from_error(e.into()),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn hk_graph_free(g: *mut HkGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn hk_graph_vertex_count(g: *const HkGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.n())
}

#[no_mangle]
pub unsafe extern "C" fn hk_graph_to_graph6(g: *const HkGraph, out: *mut *mut c_char) -> HkStatus {
    guard(|| {
        non_null!(g, out);
        write_string(out, encode_graph6(&(*g).inner))
    })
}

#[no_mangle]
pub unsafe extern "C" fn hk_graph_automorphisms(g: *const HkGraph, out: *mut *mut HkGroup) -> HkStatus {
    guard(|| {
        non_null!(g, out);
        let group = automorphism_group(&(*g).inner).build_bsgs();
        *out = Box::into_raw(Box::new(HkGroup { inner: group }));
        HkStatus::Ok
    })
}

#[no_mangle]
pub unsafe extern "C" fn hk_group_free(grp: *mut HkGroup) {
    if !grp.is_null() {
        drop(Box::from_raw(grp));
    }
}

/// Group order, or [`HkStatus::Precondition`] if it does not fit in 64 bits.
#[no_mangle]
pub unsafe extern "C" fn hk_group_order_u64(grp: *const HkGroup, out: *mut u64) -> HkStatus {
    guard(|| {
        non_null!(grp, out);
        let order = (*grp).inner.order();
        match (*grp).inner.order_u64() {
            Some(o) => {
                *out = o;
                HkStatus::Ok
            }
            None => fail(HkStatus::Precondition, &format!("order {order} exceeds 64 bits")),
        }
    })
}

/// Group order in decimal.
#[no_mangle]
pub unsafe extern "C" fn hk_group_order_string(grp: *const HkGroup, out: *mut *mut c_char) -> HkStatus {
    guard(|| {
        non_null!(grp, out);
        write_string(out, (*grp).inner.order().to_string())
    })
}

#[no_mangle]
pub unsafe extern "C" fn hk_group_is_base(
    grp: *const HkGroup,
    points: *const usize,
    len: usize,
    out: *mut bool,
) -> HkStatus {
    guard(|| {
        non_null!(grp, out);
        let set = match read_set(points, len) {
            Ok(s) => s,
            Err(s) => return s,
        };
        match invariants::is_base(&(*grp).inner, &set) {
            Ok(b) => {
                *out = b;
                HkStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn hk_group_is_distinguishing(
    grp: *const HkGroup,
    points: *const usize,
    len: usize,
    out: *mut bool,
) -> HkStatus {
    guard(|| {
        non_null!(grp, out);
        let set = match read_set(points, len) {
            Ok(s) => s,
            Err(s) => return s,
        };
        match invariants::is_distinguishing(&(*grp).inner, &set) {
            Ok(b) => {
                *out = b;
                HkStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Minimum base size. `budget` caps the subsets tested; 0 means the default.
#[no_mangle]
pub unsafe extern "C" fn hk_group_determining_number(grp: *const HkGroup, budget: u64, out: *mut usize) -> HkStatus {
    guard(|| {
        non_null!(grp, out);
        let budget = if budget == 0 { Budget::default() } else { Budget::new(budget) };
        match invariants::determining_number(&(*grp).inner, budget) {
            Ok(w) => {
                *out = w.size;
                HkStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Minimum distinguishing set size; `exists` is false when there is none.
#[no_mangle]
pub unsafe extern "C" fn hk_group_distinguishing_cost(
    grp: *const HkGroup,
    budget: u64,
    exists: *mut bool,
    out: *mut usize,
) -> HkStatus {
    guard(|| {
        non_null!(grp, exists, out);
        let budget = if budget == 0 { Budget::default() } else { Budget::new(budget) };
        match invariants::distinguishing_cost(&(*grp).inner, budget) {
            Ok(w) => {
                *exists = w.is_some();
                *out = w.map_or(0, |w| w.size);
                HkStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn hk_group_motion(grp: *const HkGroup, out: *mut usize) -> HkStatus {
    guard(|| {
        non_null!(grp, out);
        match invariants::motion(&(*grp).inner) {
            Ok(m) => {
                *out = m.motion;
                HkStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Runs a command-line invocation (without the program name) and returns its
/// JSON report in `out_json` and its exit code in `exit_code`. The report
/// may be empty when the command fails before producing one; the error text
/// is then available from [`hk_last_error_message`].
#[no_mangle]
pub unsafe extern "C" fn hk_run_json(
    argv: *const *const c_char,
    argc: usize,
    out_json: *mut *mut c_char,
    exit_code: *mut i32,
) -> HkStatus {
    guard(|| {
        non_null!(out_json, exit_code);
        if argc > 0 && argv.is_null() {
            return fail(HkStatus::NullPointer, "null argv");
        }
        let mut args = vec!["halinkit".to_string()];
        for i in 0..argc {
            match read_str(*argv.add(i)) {
                Ok(a) => args.push(a.to_string()),
                Err(s) => return s,
            }
        }
        let outcome = halinkit::cli::run(args);
        *exit_code = outcome.code;
        if !outcome.stderr.is_empty() {
            set_error(outcome.stderr.trim_end());
        }
        write_string(out_json, outcome.stdout)
    })
}
