use std::ffi::{CStr, CString};
use std::ptr;

use mdepth_ffi::*;

fn parse(text: &str, characteristic: u64) -> (MdStatus, *mut MdIdeal) {
    let c = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    let s = unsafe { md_ideal_parse(c.as_ptr(), characteristic, &mut out) };
    (s, out)
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(md_last_error()) }.to_string_lossy().into_owned()
}

#[test]
fn octagon_round_trip() {
    let edges = CString::new("n=8; edges=1-2,2-3,3-4,4-5,5-6,6-7,7-8,8-1").unwrap();
    let mut ideal = ptr::null_mut();
    assert_eq!(unsafe { md_ideal_from_edges(edges.as_ptr(), 0, &mut ideal) }, MdStatus::Ok);
    assert_eq!(unsafe { md_ideal_nvars(ideal) }, 8);

    let mut prof = ptr::null_mut();
    assert_eq!(unsafe { md_profile_compute(ideal, &mut prof) }, MdStatus::Ok);
    unsafe {
        assert_eq!(md_profile_dim(prof), 4);
        assert_eq!(md_profile_depth(prof), 3);
        assert_eq!(md_profile_mdepth(prof), 3);
        assert!(md_profile_maximal_depth(prof));
        assert!(!md_profile_cohen_macaulay(prof));
        assert_eq!(md_profile_ass_count(prof), 10);
    }

    let mut json = ptr::null_mut();
    assert_eq!(unsafe { md_profile_to_json(prof, &mut json) }, MdStatus::Ok);
    let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_owned();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["depth"], 3);
    assert_eq!(v["field"], "QQ");

    let mut seq = 7;
    assert_eq!(unsafe { md_seqcm(ideal, &mut seq) }, MdStatus::Ok);
    assert_eq!(seq, 0);

    unsafe {
        md_string_free(json);
        md_profile_free(prof);
        md_ideal_free(ideal);
    }
}

#[test]
fn status_codes_follow_exit_codes() {
    let (s, p) = parse("x1*", 0);
    assert_eq!(s, MdStatus::Malformed);
    assert!(p.is_null());
    assert!(last_error().starts_with("malformed-input"));

    let (s, _) = parse("x1*x2", 4);
    assert_eq!(s, MdStatus::Malformed);

    let (s, unit) = parse(r#"{"vars": ["x"], "gens": ["1"]}"#, 0);
    assert_eq!(s, MdStatus::Ok);
    let mut prof = ptr::null_mut();
    assert_eq!(unsafe { md_profile_compute(unit, &mut prof) }, MdStatus::Precondition);
    assert!(last_error().starts_with("undefined-module"));
    unsafe { md_ideal_free(unit) };

    assert_eq!(unsafe { md_ideal_parse(ptr::null(), 0, &mut ptr::null_mut()) }, MdStatus::NullArgument);
    assert_eq!(unsafe { md_profile_depth(ptr::null()) }, 0);
}

#[test]
fn field_choice_reaches_the_engine() {
    let facets = r#"{"vertices": 6, "facets": [[1,2,3],[1,2,4],[1,3,5],[1,4,6],[1,5,6],[2,3,6],[2,4,5],[2,5,6],[3,4,5],[3,4,6]]}"#;
    for (p, depth) in [(0, 3), (2, 2), (3, 3)] {
        let (s, ideal) = parse(facets, p);
        assert_eq!(s, MdStatus::Ok);
        let mut prof = ptr::null_mut();
        assert_eq!(unsafe { md_profile_compute(ideal, &mut prof) }, MdStatus::Ok);
        assert_eq!(unsafe { md_profile_depth(prof) }, depth, "characteristic {p}");
        unsafe {
            md_profile_free(prof);
            md_ideal_free(ideal);
        }
    }
}

#[test]
fn non_squarefree_seqcm_is_undecided() {
    let (s, ideal) = parse("x^2, x*y", 0);
    assert_eq!(s, MdStatus::Ok);
    let mut seq = 7;
    assert_eq!(unsafe { md_seqcm(ideal, &mut seq) }, MdStatus::Ok);
    assert_eq!(seq, -1);
    unsafe { md_ideal_free(ideal) };
}
