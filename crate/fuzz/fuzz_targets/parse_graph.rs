#![no_main]
use chaingraph::graphfile::{parse, render, to_dot};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(g) = parse(text) else {
        return;
    };
    let canonical = render(&g);
    let back = parse(&canonical).expect("rendered graphs parse");
    assert_eq!(back, g);
    assert_eq!(render(&back), canonical);
    let _ = g.classify();
    let _ = to_dot(&g);
});
