//! Weight system JSON decoding must never panic, only accept systems whose
//! invariants hold, and round-trip exactly.

#![no_main]

use libfuzzer_sys::fuzz_target;
use mixed_curves::WeightSystem;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(ws) = serde_json::from_str::<WeightSystem>(s) else {
        return;
    };
    assert_eq!(ws.radial().len(), ws.n_vars());
    assert_eq!(ws.polar().len(), ws.n_vars());
    assert!(ws.n_vars() > 0);
    assert!(ws.radial_degree() >= 1);
    assert!(ws.radial().iter().all(|&w| w >= 1));
    let text = serde_json::to_string(&ws).expect("serializes");
    let back: WeightSystem = serde_json::from_str(&text).expect("reparses");
    assert_eq!(back, ws, "round trip changed the weight system");
});
