#![no_main]
use chaingraph::graphfile::{is_valid_label, parse_node_list};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(nodes) = parse_node_list(text) {
            assert!(nodes.iter().all(|v| is_valid_label(v.as_str())));
            let joined: Vec<&str> = nodes.iter().map(|v| v.as_str()).collect();
            assert_eq!(parse_node_list(&joined.join(",")).unwrap(), nodes);
        }
    }
});
