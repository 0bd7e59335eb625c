#![no_main]

use libfuzzer_sys::fuzz_target;

// The edge-list parser must reject garbage gracefully and round-trip
// every file it accepts byte for byte.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(graph) = pa_core::parse_edge_list(text) {
        let mut buf = Vec::new();
        pa_core::write_edge_list(&graph, &mut buf).expect("serializing a parsed graph");
        let reparsed = pa_core::parse_edge_list(std::str::from_utf8(&buf).unwrap())
            .expect("round trip must parse");
        assert_eq!(reparsed, graph);
    }
});
