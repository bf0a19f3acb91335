#![no_main]

use alphafactor::graph::read_graph6_lines;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let mut last = 0;
    for line in read_graph6_lines(data) {
        assert!(line.line > last);
        last = line.line;
    }
});
