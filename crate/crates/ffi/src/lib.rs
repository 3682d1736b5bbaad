//! C interface to `tower-search` for `int64_t` tensors.
//!
//! Every fallible function returns a [`TsStatus`]; on failure a message
//! is available from [`ts_last_error_message`] on the same thread.
//! Tensors are opaque [`TsTensor`] handles released with
//! [`ts_tensor_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tower_search::analysis::recurrence_bound;
use tower_search::search::{Algorithm, SearchError};
use tower_search::tensor::{read_tensor_file, ProbeCounter, SortedTensor3, TensorError};

/// A validated sorted tensor of 64-bit integers.
pub struct TsTensor {
    inner: SortedTensor3<i64>,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TsStatus {
    Ok = 0,
    NullPointer = 1,
    ZeroExtent = 2,
    DimensionMismatch = 3,
    NotSorted = 4,
    IndexOutOfBounds = 5,
    Io = 6,
    Parse = 7,
    /// The algorithm cannot search a tensor of this shape.
    Unsupported = 8,
    Internal = 9,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TsAlgorithm {
    Mahl = 0,
    Bird = 1,
    Saddleback = 2,
    Rows = 3,
    Scan = 4,
}

impl From<TsAlgorithm> for Algorithm {
    fn from(a: TsAlgorithm) -> Self {
        match a {
            TsAlgorithm::Mahl => Algorithm::Mahl,
            TsAlgorithm::Bird => Algorithm::Bird,
            TsAlgorithm::Saddleback => Algorithm::Saddleback,
            TsAlgorithm::Rows => Algorithm::Rows,
            TsAlgorithm::Scan => Algorithm::Scan,
        }
    }
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TsSearchResult {
    pub found: bool,
    /// Valid only when `found`; zeros otherwise.
    pub index: [usize; 3],
    pub probes: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

fn fail(status: TsStatus, message: impl ToString) -> TsStatus {
    set_error(message.to_string());
    status
}

fn tensor_status(e: &TensorError) -> TsStatus {
    match e {
        TensorError::ZeroExtent { .. } => TsStatus::ZeroExtent,
        TensorError::DimensionMismatch { .. } => TsStatus::DimensionMismatch,
        TensorError::NotSorted { .. } | TensorError::Unordered { .. } => TsStatus::NotSorted,
        TensorError::IndexOutOfBounds { .. } | TensorError::ViewOutOfBounds { .. } => TsStatus::IndexOutOfBounds,
        TensorError::Parse(_) => TsStatus::Parse,
        TensorError::Io(_) => TsStatus::Io,
    }
}

fn guarded(body: impl FnOnce() -> TsStatus) -> TsStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|_| fail(TsStatus::Internal, "internal panic"))
}

/// Copies `len` values (row-major, last axis fastest) into a new tensor.
///
/// # Safety
/// `values` must point to `len` readable `int64_t` (it may be null when
/// `len` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ts_tensor_from_values(
    n1: usize,
    n2: usize,
    n3: usize,
    values: *const i64,
    len: usize,
    out: *mut *mut TsTensor,
) -> TsStatus {
    guarded(|| {
        if out.is_null() || (values.is_null() && len > 0) {
            return fail(TsStatus::NullPointer, "null pointer argument");
        }
        let data = if len == 0 {
            Vec::new()
        } else {
            unsafe { std::slice::from_raw_parts(values, len) }.to_vec()
        };
        match SortedTensor3::from_values([n1, n2, n3], data) {
            Ok(inner) => {
                unsafe { *out = Box::into_raw(Box::new(TsTensor { inner })) };
                TsStatus::Ok
            }
            Err(e) => fail(tensor_status(&e), e),
        }
    })
}

/// Reads a tensor in the text format.
///
/// # Safety
/// `path` must be a nul-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ts_tensor_read_file(path: *const c_char, out: *mut *mut TsTensor) -> TsStatus {
    guarded(|| {
        if path.is_null() || out.is_null() {
            return fail(TsStatus::NullPointer, "null pointer argument");
        }
        let Ok(path) = unsafe { CStr::from_ptr(path) }.to_str() else {
            return fail(TsStatus::Parse, "path is not valid UTF-8");
        };
        match read_tensor_file::<i64>(path) {
            Ok(inner) => {
                unsafe { *out = Box::into_raw(Box::new(TsTensor { inner })) };
                TsStatus::Ok
            }
            Err(e) => fail(tensor_status(&e), e),
        }
    })
}

/// Releases a tensor. Null is ignored.
///
/// # Safety
/// `tensor` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ts_tensor_free(tensor: *mut TsTensor) {
    if !tensor.is_null() {
        drop(unsafe { Box::from_raw(tensor) });
    }
}

/// Writes the three extents to `out_dims[0..3]`.
///
/// # Safety
/// `tensor` must be a live handle and `out_dims` must have room for 3 values.
#[no_mangle]
pub unsafe extern "C" fn ts_tensor_dims(tensor: *const TsTensor, out_dims: *mut usize) -> TsStatus {
    guarded(|| {
        if tensor.is_null() || out_dims.is_null() {
            return fail(TsStatus::NullPointer, "null pointer argument");
        }
        let dims = unsafe { &*tensor }.inner.dims();
        unsafe { ptr::copy_nonoverlapping(dims.as_ptr(), out_dims, 3) };
        TsStatus::Ok
    })
}

/// Searches the whole tensor for `key`, counting probes.
///
/// # Safety
/// `tensor` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ts_search(
    tensor: *const TsTensor,
    key: i64,
    algorithm: TsAlgorithm,
    out: *mut TsSearchResult,
) -> TsStatus {
    guarded(|| {
        if tensor.is_null() || out.is_null() {
            return fail(TsStatus::NullPointer, "null pointer argument");
        }
        let tensor = &unsafe { &*tensor }.inner;
        match Algorithm::from(algorithm).run(tensor, &key, &mut ProbeCounter::new()) {
            Ok(outcome) => {
                let result = TsSearchResult {
                    found: outcome.is_found(),
                    index: outcome.index().unwrap_or([0; 3]),
                    probes: outcome.probes,
                };
                unsafe { *out = result };
                TsStatus::Ok
            }
            Err(SearchError::Tensor(e)) => fail(tensor_status(&e), e),
            Err(e) => fail(TsStatus::Unsupported, e),
        }
    })
}

/// Evaluates the probe budget of the tower search for the given extents.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ts_recurrence_bound(n1: usize, n2: usize, n3: usize, out: *mut u64) -> TsStatus {
    guarded(|| {
        if out.is_null() {
            return fail(TsStatus::NullPointer, "null pointer argument");
        }
        match recurrence_bound(n1, n2, n3) {
            Ok(v) => {
                unsafe { *out = v };
                TsStatus::Ok
            }
            Err(e) => fail(TsStatus::ZeroExtent, e),
        }
    })
}

/// Message for the last failure on this thread, or null if there was none.
/// The pointer stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn ts_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |m| m.as_ptr()))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn ts_status_str(status: TsStatus) -> *const c_char {
    let text: &'static CStr = match status {
        TsStatus::Ok => c"ok",
        TsStatus::NullPointer => c"null pointer",
        TsStatus::ZeroExtent => c"zero extent",
        TsStatus::DimensionMismatch => c"value count does not match extents",
        TsStatus::NotSorted => c"tensor is not sorted",
        TsStatus::IndexOutOfBounds => c"index out of bounds",
        TsStatus::Io => c"io failure",
        TsStatus::Parse => c"parse failure",
        TsStatus::Unsupported => c"unsupported shape for algorithm",
        TsStatus::Internal => c"internal error",
    };
    text.as_ptr()
}
