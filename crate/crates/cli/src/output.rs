use serde_json::Value;

fn flatten(value: &Value, path: &str, out: &mut String) {
    match value {
        Value::Object(map) if !map.is_empty() => {
            for (k, v) in map {
                let p = if path.is_empty() {
                    k.clone()
                } else {
                    format!("{path}.{k}")
                };
                flatten(v, &p, out);
            }
        }
        Value::Array(items) if !items.is_empty() => {
            for (i, v) in items.iter().enumerate() {
                flatten(v, &format!("{path}[{i}]"), out);
            }
        }
        Value::String(s) => out.push_str(&format!("{path}\t{s}\n")),
        other => out.push_str(&format!("{path}\t{other}\n")),
    }
}

/// One `path<TAB>value` line per leaf, in document order.
pub fn to_tsv(value: &Value) -> String {
    let mut out = String::new();
    flatten(value, "", &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn leaves_are_flattened() {
        let v = json!({"b": [1, {"c": "x"}], "a": {"num": 1, "den": 3}, "e": []});
        assert_eq!(to_tsv(&v), "a.den\t3\na.num\t1\nb[0]\t1\nb[1].c\tx\ne\t[]\n");
    }
}
