use std::ffi::{CStr, CString};
use std::io::Write;
use std::path::Path;
use std::ptr;

use tower_search_ffi::*;

fn build(dims: [usize; 3], values: &[i64]) -> Result<*mut TsTensor, TsStatus> {
    let mut handle = ptr::null_mut();
    let status =
        unsafe { ts_tensor_from_values(dims[0], dims[1], dims[2], values.as_ptr(), values.len(), &mut handle) };
    if status == TsStatus::Ok {
        Ok(handle)
    } else {
        assert!(handle.is_null());
        Err(status)
    }
}

fn last_error() -> String {
    let p = ts_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

#[test]
fn build_search_free() {
    let t = build([1, 2, 2], &[0, 1, 1, 2]).unwrap();
    let mut dims = [0usize; 3];
    assert_eq!(unsafe { ts_tensor_dims(t, dims.as_mut_ptr()) }, TsStatus::Ok);
    assert_eq!(dims, [1, 2, 2]);

    let mut r = TsSearchResult::default();
    assert_eq!(unsafe { ts_search(t, 2, TsAlgorithm::Mahl, &mut r) }, TsStatus::Ok);
    assert!(r.found);
    assert_eq!(r.index, [0, 1, 1]);
    assert!(r.probes >= 1);

    assert_eq!(
        unsafe { ts_search(t, 5, TsAlgorithm::Saddleback, &mut r) },
        TsStatus::Ok
    );
    assert!(!r.found);
    assert_eq!(r.index, [0, 0, 0]);
    unsafe { ts_tensor_free(t) };
}

#[test]
fn single_cell_probe_counts() {
    let t = build([1, 1, 1], &[5]).unwrap();
    let mut r = TsSearchResult::default();
    for algo in [
        TsAlgorithm::Mahl,
        TsAlgorithm::Bird,
        TsAlgorithm::Rows,
        TsAlgorithm::Scan,
    ] {
        assert_eq!(unsafe { ts_search(t, 5, algo, &mut r) }, TsStatus::Ok);
        assert_eq!((r.found, r.probes), (true, 1));
    }
    unsafe { ts_tensor_free(t) };
}

#[test]
fn construction_errors() {
    assert_eq!(build([2, 1, 1], &[3, 1]).unwrap_err(), TsStatus::NotSorted);
    assert!(last_error().contains("sorted"), "{}", last_error());
    assert_eq!(build([0, 1, 1], &[]).unwrap_err(), TsStatus::ZeroExtent);
    assert_eq!(build([2, 2, 1], &[1, 2, 3]).unwrap_err(), TsStatus::DimensionMismatch);
    let mut handle = ptr::null_mut();
    assert_eq!(
        unsafe { ts_tensor_from_values(1, 1, 1, ptr::null(), 1, &mut handle) },
        TsStatus::NullPointer
    );
}

#[test]
fn unsupported_shape() {
    let t = build([2, 2, 2], &[0; 8]).unwrap();
    let mut r = TsSearchResult::default();
    assert_eq!(
        unsafe { ts_search(t, 0, TsAlgorithm::Bird, &mut r) },
        TsStatus::Unsupported
    );
    assert!(last_error().contains("bird"));
    unsafe { ts_tensor_free(t) };
}

#[test]
fn null_handles() {
    let mut r = TsSearchResult::default();
    assert_eq!(
        unsafe { ts_search(ptr::null(), 0, TsAlgorithm::Mahl, &mut r) },
        TsStatus::NullPointer
    );
    assert_eq!(
        unsafe { ts_tensor_dims(ptr::null(), ptr::null_mut()) },
        TsStatus::NullPointer
    );
    unsafe { ts_tensor_free(ptr::null_mut()) };
}

#[test]
fn read_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(b"1 1 3\n1 4 9\n").unwrap();
    let path = CString::new(file.path().to_str().unwrap()).unwrap();
    let mut handle = ptr::null_mut();
    assert_eq!(unsafe { ts_tensor_read_file(path.as_ptr(), &mut handle) }, TsStatus::Ok);
    let mut r = TsSearchResult::default();
    assert_eq!(unsafe { ts_search(handle, 4, TsAlgorithm::Mahl, &mut r) }, TsStatus::Ok);
    assert_eq!((r.found, r.index), (true, [0, 0, 1]));
    unsafe { ts_tensor_free(handle) };

    let missing = CString::new("/nonexistent/tower.txt").unwrap();
    assert_eq!(
        unsafe { ts_tensor_read_file(missing.as_ptr(), &mut handle) },
        TsStatus::Io
    );

    file.as_file_mut().set_len(0).unwrap();
    assert_eq!(
        unsafe { ts_tensor_read_file(path.as_ptr(), &mut handle) },
        TsStatus::Parse
    );
}

#[test]
fn bound_values() {
    let mut v = 0u64;
    assert_eq!(unsafe { ts_recurrence_bound(1, 1, 7, &mut v) }, TsStatus::Ok);
    assert_eq!(v, 3);
    assert_eq!(unsafe { ts_recurrence_bound(2, 2, 2, &mut v) }, TsStatus::Ok);
    assert_eq!(v, 8);
}

#[test]
fn header_declares_the_interface() {
    let header = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/tower_search.h")).unwrap();
    for name in [
        "typedef struct TsTensor TsTensor;",
        "TS_STATUS_NOT_SORTED = 4",
        "TS_ALGORITHM_MAHL = 0",
        "ts_tensor_from_values(",
        "ts_tensor_read_file(",
        "ts_tensor_free(",
        "ts_tensor_dims(",
        "ts_search(",
        "ts_recurrence_bound(",
        "ts_last_error_message(",
        "ts_status_str(",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}

#[test]
fn header_compiles_as_c() {
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let dir = tempfile::tempdir().unwrap();
    let source = dir.path().join("use_header.c");
    std::fs::write(
        &source,
        "#include \"tower_search.h\"\nint main(void) { TsSearchResult r; (void)r; return ts_status_str(TS_STATUS_OK) == 0; }\n",
    )
    .unwrap();
    let Ok(status) = std::process::Command::new("cc")
        .arg("-fsyntax-only")
        .arg("-Wall")
        .arg("-I")
        .arg(&include)
        .arg(&source)
        .status()
    else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    assert!(status.success());
}
