use std::process::{Command, Output};

fn goursat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_goursat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = goursat(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn count_queries() {
    assert_eq!(stdout(&["count", "12", "18"]), "80\n");
    assert_eq!(stdout(&["count", "12", "18", "--order", "6"]), "12\n");
    assert_eq!(stdout(&["count", "12", "18", "--type", "3,12"]), "2\n");
    assert_eq!(stdout(&["count", "12", "18", "--cyclic"]), "48\n");
    assert_eq!(stdout(&["count", "12", "18", "--order", "5"]), "0\n");
}

#[test]
fn count_formats() {
    let csv = stdout(&["count", "12", "18", "--type", "2,4", "--format", "csv"]);
    assert_eq!(csv, "m,n,query,order,a,b,count\n12,18,type,,2,4,1\n");
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["count", "12", "18", "--format", "json"])).unwrap();
    assert_eq!(json["count"], 80);
    assert_eq!(json["query"], "total");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["count", "12", "18", "--type", "3,4"][..],
        &["count", "0", "18"],
        &["count", "12", "18", "--order", "2", "--cyclic"],
        &["table", "12"],
        &["figure", "12", "18", "6", "2", "18", "6", "3"],
        &["figure", "41", "1", "1", "1", "1", "1", "1"],
        &["verify", "21", "20"],
        &["verify"],
        &["count", "1", "1", "--format", "xml"],
    ] {
        let out = goursat(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
    let out = goursat(&["figure", "12", "18", "6", "2", "18", "6", "3"]);
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("gcd(ell = 3, a/b = 3) != 1"), "{msg}");
}

#[test]
fn enumerate_records() {
    assert_eq!(stdout(&["enumerate", "2", "2"]).lines().count(), 5);
    assert_eq!(stdout(&["enumerate", "12", "18"]).lines().count(), 80);
    assert_eq!(stdout(&["enumerate", "1", "1"]).lines().count(), 1);
    assert_eq!(stdout(&["enumerate", "12", "18", "--limit", "7"]).lines().count(), 7);
    let csv = stdout(&["enumerate", "2", "2", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 6);
    assert!(csv.starts_with("a,b,c,d,ell,"));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["enumerate", "12", "18", "--format", "json"])).unwrap();
    assert_eq!(json["subgroups"].as_array().unwrap().len(), 80);
}

#[test]
fn figure_bullets_equal_order() {
    assert_eq!(stdout(&["figure", "2", "2", "1", "1", "1", "1", "1"]), "1 . .\n0 * .\n  0 1\n");
    for (args, order) in [
        (["figure", "12", "18", "6", "2", "18", "6", "1"], 36),
        (["figure", "12", "18", "4", "4", "2", "2", "1"], 8),
        (["figure", "12", "18", "12", "12", "18", "18", "1"], 216),
    ] {
        assert_eq!(stdout(&args).matches('*').count(), order);
    }
    let csv = stdout(&["figure", "12", "18", "6", "2", "18", "6", "1", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 37);
}

#[test]
fn verify_runs() {
    assert_eq!(stdout(&["verify", "1", "1"]), "OK, 1 subgroups, 0 mismatches\n");
    let sweep = stdout(&["verify", "--range", "8", "8"]);
    assert_eq!(sweep.lines().filter(|l| l.contains(") OK,")).count(), 64);
    assert!(sweep.ends_with("OK, 64 pairs, 0 mismatches\n"));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["verify", "12", "18", "--format", "json"])).unwrap();
    assert_eq!(json["ok"], true);
    assert_eq!(stdout(&["verify", "21", "20", "--bound", "420"]), "OK, 24 subgroups, 0 mismatches\n");
}

fn sorted_numbers(text: &str) -> Vec<u64> {
    let mut v: Vec<u64> = text
        .split(|c: char| !c.is_ascii_digit())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().unwrap())
        .collect();
    v.sort_unstable();
    v
}

#[test]
fn table_formats_agree() {
    let csv = stdout(&["table", "4", "6", "--format", "csv"]);
    let json = stdout(&["table", "4", "6", "--format", "json"]);
    let mut from_csv = sorted_numbers(&format!("{csv} 4 6"));
    from_csv.sort_unstable();
    assert_eq!(from_csv, sorted_numbers(&json));

    let plain = stdout(&["table", "4", "6"]);
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    for row in rows {
        let f: Vec<&str> = row.split(',').collect();
        let line = match f[0] {
            "total" | "cyclic" | "noncyclic" => format!("{}: {}", f[0], f[3]),
            "order" => format!("  {}: {}", f[1], f[3]),
            _ if f[1] == "1" => format!("  Z_{}: {}", f[2], f[3]),
            _ => format!("  Z_{} x Z_{}: {}", f[1], f[2], f[3]),
        };
        assert!(plain.lines().any(|l| l == line), "missing `{line}`");
    }
}
