#![no_main]

use libfuzzer_sys::fuzz_target;

// Config parsing never panics; accepted configs survive the canonical
// rendering unchanged.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(cfg) = harness_cli::ExperimentConfig::parse(text) {
        let back = harness_cli::ExperimentConfig::parse(&cfg.canonical())
            .expect("canonical form must parse");
        assert_eq!(back, cfg);
        assert_eq!(back.hash(), cfg.hash());
    }
});
