#![no_main]

use alphafactor::theorem::{parse_rational, to_f64};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|s: &str| {
    if let Ok(q) = parse_rational(s) {
        let _ = to_f64(&q);
    }
});
