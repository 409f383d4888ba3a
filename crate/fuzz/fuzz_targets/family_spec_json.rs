//! Family specs from JSON must never panic, and every buildable spec must
//! produce a strongly polar homogeneous polynomial.

#![no_main]

use libfuzzer_sys::fuzz_target;
use mixed_curves::{infer_weights, FamilySpec, HomogeneityClass};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(spec) = serde_json::from_str::<FamilySpec>(s) else {
        return;
    };
    let Ok(f) = spec.build() else {
        return;
    };
    assert!(!f.is_zero(), "built family member is zero");
    match infer_weights(&f) {
        Ok(HomogeneityClass::StronglyPolar(ws)) => {
            assert!(ws.polar_degree() >= 1);
        }
        other => panic!("family member must be strongly polar, got {other:?}"),
    }
    if let Some(roots) = spec.chart_roots() {
        let roots = roots.expect("buildable spec has well-formed roots");
        for w in &roots {
            assert!(w.re.is_finite() && w.im.is_finite());
        }
    }
});
