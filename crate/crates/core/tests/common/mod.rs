#![allow(dead_code)]

use serde_json::Value;

/// Frozen reference values produced by `fixtures/gen_fixtures.py`.
pub fn fixtures() -> Value {
    let text = include_str!("../fixtures/fixtures.json");
    serde_json::from_str(text).expect("fixtures.json parses")
}

pub fn num(v: &Value) -> f64 {
    v.as_f64().expect("numeric fixture")
}

pub fn mean_and_se(values: impl IntoIterator<Item = f64>) -> (f64, f64) {
    let (mut n, mut s, mut s2) = (0.0, 0.0, 0.0);
    for v in values {
        n += 1.0;
        s += v;
        s2 += v * v;
    }
    let m = s / n;
    (m, ((s2 / n - m * m).max(0.0) / n).sqrt())
}
