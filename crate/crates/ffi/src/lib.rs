//! C ABI for the quantum Laplace transform.
//!
//! Handles are opaque and owned by the caller once returned; free them with
//! the matching `*_free` function. Every fallible call returns a
//! [`QltStatus`]; on failure [`qlt_last_error_message`] describes the cause.
//! Complex arrays are interleaved `re, im` pairs of `double`.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use num_complex::Complex64;
use qlt_core::laplace::{
    compute_coefficients, lchs_discrete_sum, ApSpec, LaplaceGrid, SignalFunction,
};
use qlt_core::qlt::{self, build_select, predicted_gate_count, SelectVariant};
use qlt_core::QltError;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QltStatus {
    Ok = 0,
    NullPointer = 1,
    Domain = 2,
    Shape = 3,
    Resource = 4,
    Degenerate = 5,
    Unsupported = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QltVariant {
    Full = 0,
    Reduced = 1,
}

impl From<QltVariant> for SelectVariant {
    fn from(v: QltVariant) -> Self {
        match v {
            QltVariant::Full => SelectVariant::Full,
            QltVariant::Reduced => SelectVariant::Reduced,
        }
    }
}

/// Problem description: AP diagonal, quadrature grid, signal and variant.
pub struct QltConfig(qlt::QltConfig);

/// Output of [`qlt_run`].
pub struct QltResult(qlt::QltResult);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: impl Into<String>) {
    let text = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

fn status_of(err: &QltError) -> QltStatus {
    match err {
        QltError::Domain(_) => QltStatus::Domain,
        QltError::Shape(_) => QltStatus::Shape,
        QltError::Resource(_) => QltStatus::Resource,
        QltError::Degenerate(_) => QltStatus::Degenerate,
        QltError::Unsupported(_) => QltStatus::Unsupported,
    }
}

struct Failure(QltStatus, String);

impl From<QltError> for Failure {
    fn from(e: QltError) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(QltStatus::NullPointer, format!("{what} is NULL"))
}

/// Runs `body`, converting errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> QltStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => QltStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            QltStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(ptr: *const T, what: &str) -> Result<&'a T, Failure> {
    ptr.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(ptr: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if ptr.is_null() {
        return Err(null(what));
    }
    ptr.write(value);
    Ok(())
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn qlt_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(std::ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn qlt_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Creates a configuration with signal `g(t) = e^{-0.9 t}`.
///
/// The nodes are `s_x = (first_real + diff_real·x) + i(first_imag + diff_imag·x)`
/// for `x < 2^n_sys`; `m_k` and `m_t` must be powers of two.
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
#[allow(clippy::too_many_arguments)]
pub unsafe extern "C" fn qlt_config_new(
    first_real: f64,
    diff_real: f64,
    first_imag: f64,
    diff_imag: f64,
    n_sys: usize,
    k_max: f64,
    m_k: usize,
    t_max: f64,
    m_t: usize,
    beta: f64,
    variant: QltVariant,
    out: *mut *mut QltConfig,
) -> QltStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let ap = ApSpec::new(first_real, diff_real, first_imag, diff_imag, n_sys)?;
        let grid = LaplaceGrid::new(k_max, m_k, t_max, m_t, beta)?;
        let cfg = qlt::QltConfig::new(
            ap,
            grid,
            SignalFunction::ExpDecay { rate: 0.9 },
            variant.into(),
        );
        out.write(Box::into_raw(Box::new(QltConfig(cfg))));
        Ok(())
    })
}

/// # Safety
/// `config` must be NULL or a handle from [`qlt_config_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qlt_config_free(config: *mut QltConfig) {
    if !config.is_null() {
        drop(Box::from_raw(config));
    }
}

unsafe fn set_signal(config: *mut QltConfig, signal: SignalFunction) -> QltStatus {
    guard(|| {
        let cfg = config.as_mut().ok_or_else(|| null("config"))?;
        cfg.0.signal = signal;
        Ok(())
    })
}

/// `g(t) = e^{-rate·t}`.
///
/// # Safety
/// `config` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn qlt_config_set_exp_decay(config: *mut QltConfig, rate: f64) -> QltStatus {
    set_signal(config, SignalFunction::ExpDecay { rate })
}

/// `g(t) = e^{-rate·t} sin(frequency·t)`.
///
/// # Safety
/// `config` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn qlt_config_set_exp_decay_sine(
    config: *mut QltConfig,
    rate: f64,
    frequency: f64,
) -> QltStatus {
    set_signal(config, SignalFunction::ExpDecaySine { rate, frequency })
}

/// Samples `g(t_l)` at the `m_t` time nodes; `len` must equal `m_t` when
/// the configuration is run.
///
/// # Safety
/// `config` must be a live handle and `samples` must point to `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn qlt_config_set_tabulated(
    config: *mut QltConfig,
    samples: *const f64,
    len: usize,
) -> QltStatus {
    if samples.is_null() {
        set_last_error("samples is NULL");
        return QltStatus::NullPointer;
    }
    let samples = std::slice::from_raw_parts(samples, len).to_vec();
    set_signal(config, SignalFunction::Tabulated { samples })
}

/// Builds and simulates the circuit.
///
/// # Safety
/// `config` must be a live handle; `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn qlt_run(config: *const QltConfig, out: *mut *mut QltResult) -> QltStatus {
    guard(|| {
        let cfg = deref(config, "config")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let result = qlt::run_qlt(&cfg.0)?;
        out.write(Box::into_raw(Box::new(QltResult(result))));
        Ok(())
    })
}

/// # Safety
/// `result` must be NULL or a handle from [`qlt_run`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qlt_result_free(result: *mut QltResult) {
    if !result.is_null() {
        drop(Box::from_raw(result));
    }
}

/// Number of nodes (`2^n_sys`), or 0 for NULL.
///
/// # Safety
/// `result` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qlt_result_len(result: *const QltResult) -> usize {
    result.as_ref().map_or(0, |r| r.0.values.len())
}

unsafe fn copy_complex(src: &[Complex64], out: *mut f64, capacity: usize) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    if capacity < src.len() {
        return Err(Failure(
            QltStatus::BufferTooSmall,
            format!("buffer holds {capacity} complex values, {} needed", src.len()),
        ));
    }
    let dst = std::slice::from_raw_parts_mut(out, 2 * src.len());
    for (pair, z) in dst.chunks_exact_mut(2).zip(src) {
        pair[0] = z.re;
        pair[1] = z.im;
    }
    Ok(())
}

/// Rescaled transform values, one complex number per node.
///
/// # Safety
/// `result` must be a live handle and `out` must have room for
/// `2·capacity` doubles.
#[no_mangle]
pub unsafe extern "C" fn qlt_result_values(result: *const QltResult, out: *mut f64, capacity: usize) -> QltStatus {
    guard(|| copy_complex(&deref(result, "result")?.0.values, out, capacity))
}

/// Post-selected amplitudes before rescaling.
///
/// # Safety
/// `result` must be a live handle and `out` must have room for
/// `2·capacity` doubles.
#[no_mangle]
pub unsafe extern "C" fn qlt_result_raw_amplitudes(result: *const QltResult, out: *mut f64, capacity: usize) -> QltStatus {
    guard(|| copy_complex(&deref(result, "result")?.0.raw_amplitudes, out, capacity))
}

/// Laplace nodes `s_x`.
///
/// # Safety
/// `result` must be a live handle and `out` must have room for
/// `2·capacity` doubles.
#[no_mangle]
pub unsafe extern "C" fn qlt_result_nodes(result: *const QltResult, out: *mut f64, capacity: usize) -> QltStatus {
    guard(|| copy_complex(&deref(result, "result")?.0.nodes, out, capacity))
}

/// `‖c‖₁ · ‖ĉ‖₁ · √(2^n_sys)`, or NaN for NULL.
///
/// # Safety
/// `result` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qlt_result_rescale_factor(result: *const QltResult) -> f64 {
    result.as_ref().map_or(f64::NAN, |r| r.0.rescale_factor)
}

/// Probability of the all-zero ancilla branch, or NaN for NULL.
///
/// # Safety
/// `result` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qlt_result_success_weight(result: *const QltResult) -> f64 {
    result.as_ref().map_or(f64::NAN, |r| r.0.success_weight)
}

/// Classical discrete double sum at an arbitrary `s`.
///
/// # Safety
/// `config` must be a live handle; `out_re` and `out_im` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qlt_lchs_sum(
    config: *const QltConfig,
    s_re: f64,
    s_im: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> QltStatus {
    guard(|| {
        let cfg = &deref(config, "config")?.0;
        let co = compute_coefficients(&cfg.grid, &cfg.signal)?;
        let v = lchs_discrete_sum(&co, &cfg.grid, Complex64::new(s_re, s_im))?;
        write_out(out_re, v.re, "out_re")?;
        write_out(out_im, v.im, "out_im")
    })
}

/// Closed-form SELECT gate count for the configured variant.
///
/// # Safety
/// `config` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qlt_predicted_gate_count(config: *const QltConfig, out: *mut usize) -> QltStatus {
    guard(|| {
        let n = predicted_gate_count(&deref(config, "config")?.0)?;
        write_out(out, n, "out")
    })
}

/// Gate count of the SELECT circuit as constructed.
///
/// # Safety
/// `config` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qlt_select_gate_count(config: *const QltConfig, out: *mut usize) -> QltStatus {
    guard(|| {
        let n = build_select(&deref(config, "config")?.0)?.len();
        write_out(out, n, "out")
    })
}

/// Largest `|circuit − classical|` over all nodes.
///
/// # Safety
/// `config` must be a live handle; `max_abs_diff` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qlt_verify(config: *const QltConfig, max_abs_diff: *mut f64) -> QltStatus {
    guard(|| {
        let report = qlt::verify_against_classical(&deref(config, "config")?.0)?;
        write_out(max_abs_diff, report.max_abs_diff, "max_abs_diff")
    })
}
