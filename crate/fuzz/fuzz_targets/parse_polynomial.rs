//! The text parser must never panic, and anything it accepts must survive
//! an exact print/reparse round trip.

#![no_main]

use libfuzzer_sys::fuzz_target;
use mixed_curves::{parse_polynomial, parse_polynomial_infer};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(f) = parse_polynomial_infer(s) else {
        return;
    };
    let printed = f.to_string();
    let g = parse_polynomial(&printed, f.n_vars()).expect("canonical text reparses");
    assert_eq!(g, f, "round trip changed the polynomial");
    assert_eq!(g.to_string(), printed, "second print differs");
});
