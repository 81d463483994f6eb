#![no_main]

use fracint::PowerFunction;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = text.parse::<PowerFunction>() {
        // Display output must parse back to the same function.
        let again: PowerFunction = p.to_string().parse().expect("display round-trips");
        assert_eq!(p, again);
        assert!(p.coefficient().is_finite() && p.exponent().is_finite());
    }
});
