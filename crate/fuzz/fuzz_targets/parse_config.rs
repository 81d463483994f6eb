#![no_main]

use fracint::cli::parse_config;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(cfg) = parse_config(text) {
        for v in [cfg.abs_tol, cfg.rel_tol, cfg.compare_tol]
            .into_iter()
            .flatten()
        {
            assert!(v.is_finite() && v > 0.0);
        }
        for n in [cfg.budget, cfg.n, cfg.grid, cfg.samples]
            .into_iter()
            .flatten()
        {
            assert!(n > 0);
        }
    }
});
