//! C interface to the `oretower` library.
//!
//! Objects are opaque handles created by `ot_*_new`/`ot_*_parse` functions and
//! released by the matching `ot_*_free`. Every fallible function returns an
//! [`OtStatus`]; on failure [`ot_last_error`] describes the problem for the
//! calling thread. Strings returned to the caller are freed with [`ot_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use oretower::cli::{run_task, Options};
use oretower::report::Verdict;
use oretower::tower::{Element, OreTower};
use oretower::zoo::{from_spec_str, AlgebraBundle};
use oretower::Error;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OtStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    UnboundName = 4,
    NotInvertible = 5,
    /// Operands belong to different algebras or forms.
    Mismatch = 6,
    /// Constructor arguments or an algebra failed validation.
    InvalidAlgebra = 7,
    Invalid = 8,
    /// A task file failed to parse; see the last error for the location.
    Task = 9,
    Panic = 10,
}

/// An algebra from the zoo together with its alternate forms and named elements.
pub struct OtAlgebra {
    bundle: AlgebraBundle,
}

/// An element in normal form, tied to the tower it lives in.
pub struct OtElement {
    tower: OreTower,
    value: Element,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(s).ok());
}

fn status_of(e: &Error) -> OtStatus {
    match e {
        Error::Syntax { .. } => OtStatus::Syntax,
        Error::UnboundName(_) => OtStatus::UnboundName,
        Error::NotInvertible(_) | Error::DivisionByZero | Error::DenominatorNotInMonoid(_) => {
            OtStatus::NotInvertible
        }
        Error::GjmaConditionFailed { .. }
        | Error::ImageNotInP(_)
        | Error::MalformedTower(_)
        | Error::FactorizationMismatch(_) => OtStatus::InvalidAlgebra,
        _ => OtStatus::Invalid,
    }
}

/// Runs `f`, converting errors and panics into a status and the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), (OtStatus, String)>) -> OtStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => OtStatus::Ok,
        Ok(Err((s, m))) => {
            set_error(m);
            s
        }
        Err(_) => {
            set_error("internal error (panic)");
            OtStatus::Panic
        }
    }
}

fn core_err(e: Error) -> (OtStatus, String) {
    (status_of(&e), e.to_string())
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, (OtStatus, String)> {
    if p.is_null() {
        return Err((OtStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (OtStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn out_ptr<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, (OtStatus, String)> {
    p.as_mut()
        .ok_or_else(|| (OtStatus::NullArgument, format!("{what} is null")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, (OtStatus, String)> {
    p.as_ref()
        .ok_or_else(|| (OtStatus::NullArgument, format!("{what} is null")))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .expect("interior nul removed")
        .into_raw()
}

/// Message for the last failure on this thread, or null. Valid until the next failing call.
#[no_mangle]
pub extern "C" fn ot_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn ot_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ot_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds an algebra from a constructor string such as `Gf(c^2)` or `Mq2(q)`.
///
/// # Safety
/// `spec` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ot_algebra_new(spec: *const c_char, out: *mut *mut OtAlgebra) -> OtStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let spec = text(spec, "spec")?;
        let bundle = from_spec_str(spec).map_err(core_err)?;
        *out = Box::into_raw(Box::new(OtAlgebra { bundle }));
        Ok(())
    })
}

/// # Safety
/// `a` must be null or a handle from [`ot_algebra_new`] that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn ot_algebra_free(a: *mut OtAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Reduces the defining relations of every form; `*passed` is 1 when all vanish.
///
/// # Safety
/// `a` must be a live algebra handle; `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ot_algebra_self_check(
    a: *const OtAlgebra,
    passed: *mut c_int,
) -> OtStatus {
    guard(|| {
        let a = handle(a, "algebra")?;
        let passed = out_ptr(passed, "passed")?;
        let reports = a.bundle.self_check().map_err(core_err)?;
        *passed = reports.iter().all(|(_, r)| r.passed()) as c_int;
        Ok(())
    })
}

/// Human-readable description of the main tower (one line per skew variable).
///
/// # Safety
/// `a` must be a live algebra handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ot_algebra_describe(
    a: *const OtAlgebra,
    out: *mut *mut c_char,
) -> OtStatus {
    guard(|| {
        let a = handle(a, "algebra")?;
        let out = out_ptr(out, "out")?;
        *out = c_string(a.bundle.tower().describe());
        Ok(())
    })
}

/// Parses an expression in a form of the algebra (`form` null or empty for the main form).
///
/// # Safety
/// `a` must be a live algebra handle; `form` null or a string; `expr` a string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ot_element_parse(
    a: *const OtAlgebra,
    form: *const c_char,
    expr: *const c_char,
    out: *mut *mut OtElement,
) -> OtStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let a = handle(a, "algebra")?;
        let key = if form.is_null() {
            None
        } else {
            Some(text(form, "form")?)
        };
        let expr = text(expr, "expr")?;
        let f = a.bundle.form(key).map_err(core_err)?;
        let value =
            oretower::lang::eval_str(expr, &f.tower, &Default::default()).map_err(core_err)?;
        *out = Box::into_raw(Box::new(OtElement {
            tower: f.tower.clone(),
            value,
        }));
        Ok(())
    })
}

/// A named element of the algebra, e.g. `z` or `detq`.
///
/// # Safety
/// `a` must be a live algebra handle; `name` a string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ot_element_named(
    a: *const OtAlgebra,
    name: *const c_char,
    out: *mut *mut OtElement,
) -> OtStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let a = handle(a, "algebra")?;
        let (value, tower) = a.bundle.element(text(name, "name")?).map_err(core_err)?;
        *out = Box::into_raw(Box::new(OtElement {
            tower: tower.clone(),
            value: value.clone(),
        }));
        Ok(())
    })
}

/// # Safety
/// `e` must be null or a live element handle.
#[no_mangle]
pub unsafe extern "C" fn ot_element_free(e: *mut OtElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

#[derive(Clone, Copy)]
enum BinOp {
    Add,
    Sub,
    Mul,
    Commutator,
}

unsafe fn binary(
    x: *const OtElement,
    y: *const OtElement,
    out: *mut *mut OtElement,
    op: BinOp,
) -> OtStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let (x, y) = (handle(x, "x")?, handle(y, "y")?);
        if x.tower.gen_names() != y.tower.gen_names()
            || x.tower.monoid().gens() != y.tower.monoid().gens()
        {
            return Err((
                OtStatus::Mismatch,
                "operands live in different algebras".into(),
            ));
        }
        let t = &x.tower;
        let value = match op {
            BinOp::Add => x.value.add(&y.value),
            BinOp::Sub => x.value.sub(&y.value),
            BinOp::Mul => t.mul(&x.value, &y.value),
            BinOp::Commutator => t.commutator(&x.value, &y.value),
        };
        *out = Box::into_raw(Box::new(OtElement {
            tower: t.clone(),
            value,
        }));
        Ok(())
    })
}

/// `*out = x + y`.
///
/// # Safety
/// `x`, `y` must be live element handles; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ot_element_add(
    x: *const OtElement,
    y: *const OtElement,
    out: *mut *mut OtElement,
) -> OtStatus {
    binary(x, y, out, BinOp::Add)
}

/// `*out = x - y`.
///
/// # Safety
/// As for [`ot_element_add`].
#[no_mangle]
pub unsafe extern "C" fn ot_element_sub(
    x: *const OtElement,
    y: *const OtElement,
    out: *mut *mut OtElement,
) -> OtStatus {
    binary(x, y, out, BinOp::Sub)
}

/// `*out = x * y` in normal form.
///
/// # Safety
/// As for [`ot_element_add`].
#[no_mangle]
pub unsafe extern "C" fn ot_element_mul(
    x: *const OtElement,
    y: *const OtElement,
    out: *mut *mut OtElement,
) -> OtStatus {
    binary(x, y, out, BinOp::Mul)
}

/// `*out = x*y - y*x`.
///
/// # Safety
/// As for [`ot_element_add`].
#[no_mangle]
pub unsafe extern "C" fn ot_element_commutator(
    x: *const OtElement,
    y: *const OtElement,
    out: *mut *mut OtElement,
) -> OtStatus {
    binary(x, y, out, BinOp::Commutator)
}

/// `*result` = 1 if the element is zero.
///
/// # Safety
/// `e` must be a live element handle; `result` writable.
#[no_mangle]
pub unsafe extern "C" fn ot_element_is_zero(e: *const OtElement, result: *mut c_int) -> OtStatus {
    guard(|| {
        let e = handle(e, "element")?;
        *out_ptr(result, "result")? = e.value.is_zero() as c_int;
        Ok(())
    })
}

/// `*result` = 1 if the element commutes with every generator.
///
/// # Safety
/// `e` must be a live element handle; `result` writable.
#[no_mangle]
pub unsafe extern "C" fn ot_element_is_central(
    e: *const OtElement,
    result: *mut c_int,
) -> OtStatus {
    guard(|| {
        let e = handle(e, "element")?;
        *out_ptr(result, "result")? = e.tower.is_central(&e.value) as c_int;
        Ok(())
    })
}

/// Normal form as a parseable string; free with [`ot_string_free`].
///
/// # Safety
/// `e` must be a live element handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ot_element_to_string(
    e: *const OtElement,
    out: *mut *mut c_char,
) -> OtStatus {
    guard(|| {
        let e = handle(e, "element")?;
        let out = out_ptr(out, "out")?;
        *out = c_string(e.tower.fmt(&e.value));
        Ok(())
    })
}

/// Runs a task file given as text. On success `*report` holds the plain-text
/// report and `*exit_code` is 0 (all passed), 1 (a check failed) or 2 (a check errored).
///
/// # Safety
/// `task` must be a string; `report` and `exit_code` writable.
#[no_mangle]
pub unsafe extern "C" fn ot_run_task(
    task: *const c_char,
    seed: u64,
    report: *mut *mut c_char,
    exit_code: *mut c_int,
) -> OtStatus {
    guard(|| {
        let report = out_ptr(report, "report")?;
        *report = ptr::null_mut();
        let exit_code = out_ptr(exit_code, "exit_code")?;
        let task = text(task, "task")?;
        let opts = Options {
            seed,
            ..Options::default()
        };
        let r = run_task("task", task, &opts).map_err(|e| (OtStatus::Task, e.to_string()))?;
        *exit_code = r.exit_code();
        *report = c_string(r.render_plain());
        Ok(())
    })
}
