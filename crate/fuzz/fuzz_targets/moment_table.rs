#![no_main]

use libfuzzer_sys::fuzz_target;

// Moment-table JSON decoding never panics, only admits validated tables,
// and the JSON form round-trips exactly.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(table) = moment_theory::MomentTable::from_json(text) {
        assert!(table.validate().is_ok());
        let back = moment_theory::MomentTable::from_json(&table.to_json())
            .expect("re-serialized table must parse");
        assert_eq!(back, table);
    }
});
