use pyo3::ffi::c_str;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn with_module(code: &std::ffi::CStr) {
    Python::initialize();
    Python::attach(|py| {
        let m = PyModule::new(py, "pseudopower_py").unwrap();
        pseudopower_py::register(&m).unwrap();
        let globals = PyDict::new(py);
        globals.set_item("pp", m).unwrap();
        if let Err(e) = py.run(code, Some(&globals), None) {
            e.print(py);
            panic!("python snippet failed");
        }
    });
}

#[test]
fn detection_from_python() {
    with_module(c_str!(
        r#"
wc = pp.Involution.watson_crick()
assert str(wc) == "(A,T),(C,G).mir"
h = pp.first_hit("ACGCGT", wc, 2)
assert (h.start, h.block_len, h.pattern) == (1, 3, ["same", "phi"])
assert pp.is_free("0212021", pp.Involution("012", "(0,1).mir"), 2)
assert len(pp.find_all("ACGCGT", wc, 2)) == 5
"#
    ));
}

#[test]
fn search_and_profile_from_python() {
    with_module(c_str!(
        r#"
r = pp.dfs_search(pp.Involution("01", "(0,1).mir"), 3)
assert (r.nodes, r.leaves, r.depth, r.exhausted) == (15, 8, 3, True)
p = pp.profile("01001010", pp.Involution("01"))
assert p.cmp == [0, 0, 0, 3, 0, 0, 0, 0, 0]
assert p.lmp[-1] == 2
assert pp.generate("thue_morse", 8) == "01101001"
"#
    ));
}

#[test]
fn errors_become_value_errors() {
    with_module(c_str!(
        r#"
for bad in [lambda: pp.Involution("012", "(0,3).mir"),
            lambda: pp.first_hit("01", pp.Involution("01"), 1),
            lambda: pp.generate("fibonacci", 3),
            lambda: pp.first_hit("0123", pp.Involution("012"), 2)]:
    try:
        bad()
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")
"#
    ));
}
