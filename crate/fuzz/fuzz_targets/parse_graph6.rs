#![no_main]

use alphafactor::graph::{parse_graph6, write_graph6};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = parse_graph6(data) {
        let text = write_graph6(&g).expect("parsed graph re-encodes");
        let again = parse_graph6(&text).expect("encoding parses");
        assert_eq!(g, again);
    }
});
