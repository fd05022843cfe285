use hyparr_web::{chamber_view, diag_explorer, line_zeta, parse_lines};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn three_lines() {
    let v = parse(&line_zeta("1 0\n0 1\n1 -1"));
    assert_eq!(v["zeta"], "(-s + 2)/((s + 1)(3s + 2))");
    assert_eq!(v["poles"], serde_json::json!(["-2/3", "-1"]));
    assert_eq!(v["lct"], "2/3");
}

#[test]
fn line_input_errors() {
    assert!(parse(&line_zeta("1 0\n2 0")).get("error").is_some());
    assert!(parse(&line_zeta("1")).get("error").is_some());
    assert!(parse(&line_zeta("")).get("error").is_some());
    assert_eq!(parse_lines("1 0 3\n0 1").unwrap().mults(), &[3, 1]);
}

#[test]
fn chambers() {
    let v = parse(&chamber_view("diagonal", "1/10,1/10", "3/2,3/2"));
    assert_eq!(v["crossings"].as_array().unwrap().len(), 4);
    assert_eq!(v["crossings"][0], "a1 + a2 = 1");
    assert_eq!(v["same_chamber"], false);
    let svg = v["svg"].as_str().unwrap();
    assert!(svg.starts_with("<svg") && svg.ends_with("</svg>"));
    let same = parse(&chamber_view("diagonal", "1/5,3/10", "2/5,1/10"));
    assert_eq!(same["same_chamber"], true);
    assert!(parse(&chamber_view("skew", "0,0", "1,1")).get("svg").is_some());
    assert!(parse(&chamber_view("nope", "0,0", "1,1")).get("error").is_some());
    assert!(parse(&chamber_view("diagonal", "0", "1,1")).get("error").is_some());
}

#[test]
fn diagonal() {
    let v = parse(&diag_explorer(0, 0, 1, "1/2,1/2", "3/2,3/2"));
    assert_eq!(v["member_at_alpha"], true);
    assert_eq!(v["member_at_beta"], false);
    assert_eq!(v["eigenvalue"], "-1");
    assert_eq!(v["annihilator"], "(s1 + s2 + 1)(s1 + s2 + 2)");
    assert!(parse(&diag_explorer(0, 0, 1, "1,1", "0,0")).get("error").is_some());
}
