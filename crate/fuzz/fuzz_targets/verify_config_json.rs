//! Verify configs from JSON must never panic; whatever validate() accepts
//! must actually satisfy the ordering invariant, and configs round-trip.

#![no_main]

use libfuzzer_sys::fuzz_target;
use mixed_curves::VerifyConfig;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(cfg) = serde_json::from_str::<VerifyConfig>(s) else {
        return;
    };
    if cfg.validate().is_ok() {
        assert!(cfg.trials > 0 && cfg.grid > 0);
        assert!(cfg.tol > 0.0 && cfg.tol < cfg.cluster_eps);
        assert!(cfg.cluster_eps < cfg.search_radius);
        assert!(cfg.search_radius.is_finite());
    }
    let text = serde_json::to_string(&cfg).expect("serializes");
    let back: VerifyConfig = serde_json::from_str(&text).expect("reparses");
    // NaN fields never validate, and non-NaN configs round-trip exactly.
    if cfg.validate().is_ok() {
        assert_eq!(back, cfg);
    }
});
