use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn lab(args: &[&str]) -> Output {
    lab_with(args, "", &[])
}

fn lab_with(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_stanley-lab"))
        .args(args)
        .env_remove("STANLEY_LAB_CONFIG")
        .envs(env.iter().copied())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn lines(o: &Output) -> Vec<String> {
    String::from_utf8(o.stdout.clone())
        .unwrap()
        .lines()
        .map(str::to_string)
        .collect()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is one JSON value")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn enumerate_stanley_by_columns() {
    let o = lab(&[
        "enumerate",
        "--family",
        "stanley",
        "--measure",
        "columns",
        "--value",
        "4",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        lines(&o),
        [
            r#"{"rows":[[0,2],[1,2],[2,2]]}"#,
            r#"{"rows":[[0,2],[1,3]]}"#,
            r#"{"rows":[[0,3],[1,3]]}"#,
            r#"{"rows":[[0,3],[2,2]]}"#,
            r#"{"rows":[[0,4]]}"#,
        ]
    );
}

#[test]
fn enumerate_grouped_counts() {
    let o = lab(&[
        "enumerate",
        "--family",
        "stanley",
        "--measure",
        "area",
        "--value",
        "6",
        "--group-by",
        "row",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(lines(&o), [r#"{"1":1,"2":4,"3":1}"#]);
}

#[test]
fn enumerate_empty_dyck_path() {
    let o = lab(&[
        "enumerate",
        "--family",
        "dyck",
        "--measure",
        "semilength",
        "--value",
        "0",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(lines(&o), [r#"{"word":""}"#]);
}

#[test]
fn enumerate_cap_and_usage_errors() {
    let capped = lab(&[
        "enumerate",
        "--family",
        "dyck",
        "--measure",
        "semilength",
        "--value",
        "6",
        "--limit",
        "10",
    ]);
    assert_eq!(code(&capped), 3);
    assert!(stderr(&capped).contains("cap of 10"));

    let unsupported = lab(&[
        "enumerate",
        "--family",
        "dyck",
        "--measure",
        "area",
        "--value",
        "3",
    ]);
    assert_eq!(code(&unsupported), 2);
    let unknown = lab(&[
        "enumerate",
        "--family",
        "polyomino",
        "--measure",
        "area",
        "--value",
        "3",
    ]);
    assert_eq!(code(&unknown), 2);
    let missing = lab(&["enumerate", "--family", "dyck"]);
    assert_eq!(code(&missing), 2);
    let bad_stat = lab(&[
        "enumerate",
        "--family",
        "dyck",
        "--measure",
        "semilength",
        "--value",
        "2",
        "--group-by",
        "x",
    ]);
    assert_eq!(code(&bad_stat), 2);
}

#[test]
fn enumerate_parallel_and_cached_match_sequential() {
    let args = [
        "enumerate",
        "--family",
        "stanley",
        "--measure",
        "columns",
        "--value",
        "9",
    ];
    let sequential = lab(&args).stdout;
    let parallel = lab(&[&args[..], &["--jobs", "4"]].concat()).stdout;
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let first = lab(&[&args[..], &["--cache-dir", cache]].concat()).stdout;
    let second = lab(&[&args[..], &["--cache-dir", cache]].concat()).stdout;
    assert_eq!(sequential.iter().filter(|&&b| b == b'\n').count(), 1430);
    assert_eq!(sequential, parallel);
    assert_eq!(sequential, first);
    assert_eq!(sequential, second);
}

#[test]
fn map_phi_of_five_row_polyomino() {
    let o = lab_with(
        &["map", "--bijection", "phi"],
        "{\"rows\":[[0,6],[3,6],[4,7],[10,3],[11,5]]}\n",
        &[],
    );
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(r["out"]["word"], "UUUUUDDDUUUDUUDDDDDDUUDUUUDDDD");
    assert_eq!(r["in"]["rows"][0], serde_json::json!([0, 6]));
    assert_eq!(r["stats_in"]["sper"], 21);
    assert_eq!(r["stats_out"]["semilength"], 15);
}

#[test]
fn map_psi_of_drawn_parallelogram() {
    let input = "{\"columns\":[[0,3],[0,4],[2,2],[2,4],[3,4],[5,2],[5,2],[5,3]]}\n";
    let o = lab_with(&["map", "--bijection", "psi"], input, &[]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(r["stats_out"]["e"], 24);
    assert_eq!(r["stats_out"]["o"], 16);
    assert_eq!(r["stats_in"]["area"], 24);
}

#[test]
fn map_phi_inv_of_empty_word() {
    let o = lab_with(&["map", "--bijection", "phi-inv"], "{\"word\":\"\"}\n", &[]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["out"], serde_json::json!({"rows": [[0, 1]]}));
}

#[test]
fn map_every_bijection_accepts_its_source() {
    let cases = [
        ("phi", r#"{"rows":[[0,2],[1,2]]}"#, r#"{"word":"UDUD"}"#),
        ("phi-inv", r#"{"word":"UUDD"}"#, r#"{"rows":[[0,3]]}"#),
        ("chi", r#"{"word":"UFDF"}"#, r#"{"rows":[[0,3],[1,3]]}"#),
        (
            "chi-prime",
            r#"{"word":"UUDUDD"}"#,
            r#"{"rows":[[0,2],[1,3]]}"#,
        ),
        ("f", r#"{"diagonals":[2,1]}"#, r#"{"rows":[[0,3]]}"#),
        ("f-inv", r#"{"rows":[[0,3]]}"#, r#"{"diagonals":[2,1]}"#),
        ("h", r#"{"columns":[[0,1]]}"#, r#"{"word":"UD"}"#),
        ("psi", r#"{"columns":[[0,1]]}"#, r#"{"diagonals":[1]}"#),
    ];
    for (name, input, expected) in cases {
        let o = lab_with(&["map", "--bijection", name], &format!("{input}\n"), &[]);
        assert_eq!(code(&o), 0, "{name}: {}", stderr(&o));
        let expected: Value = serde_json::from_str(expected).unwrap();
        assert_eq!(json(&o)["out"], expected, "{name}");
    }
}

#[test]
fn map_invalid_lines() {
    let input = "{\"word\":\"UD\"}\n{\"word\":\"UUUDDD\"}\n\n{\"word\":\"UDUD\"}\n";
    let strict = lab_with(&["map", "--bijection", "chi-prime"], input, &[]);
    assert_eq!(code(&strict), 4);
    assert!(stderr(&strict).contains("line 2"), "{}", stderr(&strict));
    assert_eq!(lines(&strict).len(), 1);

    let lenient = lab_with(
        &["map", "--bijection", "chi-prime", "--skip-invalid"],
        input,
        &[],
    );
    assert_eq!(code(&lenient), 0);
    assert_eq!(lines(&lenient).len(), 2);
    assert!(stderr(&lenient).contains("line 2"));

    let malformed = lab_with(
        &["map", "--bijection", "phi"],
        "{\"rows\":[[0,2],[5,2]]}\n",
        &[],
    );
    assert_eq!(code(&malformed), 4);
    assert!(stderr(&malformed).contains("line 1"));
}

#[test]
fn map_reads_input_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("paths.jsonl");
    std::fs::write(&path, "{\"word\":\"\"}\n{\"word\":\"UD\"}\n").unwrap();
    let o = lab(&[
        "map",
        "--bijection",
        "phi-inv",
        "--in",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(lines(&o).len(), 2);
    let missing = lab(&[
        "map",
        "--bijection",
        "phi-inv",
        "--in",
        dir.path().join("none").to_str().unwrap(),
    ]);
    assert_eq!(code(&missing), 1);
}

#[test]
fn series_columns_leading_term() {
    let o = lab(&["series", "--gf", "columns", "--order", "1"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(r["g_u"]["text"], "x*u");
    assert_eq!(r["gf"], "columns");
    assert!(r.get("verified_against_oracle").is_none());
}

#[test]
fn series_area_coefficients() {
    let o = lab(&["series", "--gf", "area", "--order", "11"]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        json(&o)["text"],
        "z + z^2 + z^3 + 2*z^4 + 3*z^5 + 6*z^6 + 10*z^7 + 19*z^8 + 34*z^9 + 63*z^10 + 115*z^11"
    );
}

#[test]
fn series_cf_a_sixth_coefficient() {
    let o = lab(&["series", "--gf", "cf-a", "--order", "6"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    let vars: Vec<&str> = r["series"]["vars"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    let slot = |name: &str| vars.iter().position(|v| *v == name).unwrap();
    let (p, q, v) = (slot("p"), slot("q"), slot("v"));
    let mut got: Vec<(i64, i64, String)> = r["series"]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|t| t["e"][q] == 6)
        .map(|t| {
            (
                t["e"][p].as_i64().unwrap(),
                t["e"][v].as_i64().unwrap(),
                t["c"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    got.sort();
    // p (p^5 + 5p^4 + 3p^3 v + p^2 v^2 + 10p^3 + 6p^2 v + p v^2 + 10p^2 + 3p v + 5p + 1)
    let mut expected: Vec<(i64, i64, String)> = [
        (6, 0, 1),
        (5, 0, 5),
        (4, 1, 3),
        (3, 2, 1),
        (4, 0, 10),
        (3, 1, 6),
        (2, 2, 1),
        (3, 0, 10),
        (2, 1, 3),
        (2, 0, 5),
        (1, 0, 1),
    ]
    .into_iter()
    .map(|(a, b, c)| (a, b, c.to_string()))
    .collect();
    expected.sort();
    assert_eq!(got, expected);
}

#[test]
fn series_with_oracle() {
    let o = lab(&["series", "--gf", "columns", "--order", "8", "--verify"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(json(&o)["verified_against_oracle"], true);

    let o = lab(&["series", "--gf", "full", "--order", "5", "--verify"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(json(&o)["verified_against_oracle"], true);

    let o = lab(&[
        "series",
        "--gf",
        "cf-specializations",
        "--order",
        "8",
        "--verify",
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(json(&o)["verified_against_oracle"], true);
}

#[test]
fn series_oracle_failure_is_loud() {
    // The printed edgint-free count by semiperimeter disagrees with enumeration.
    let o = lab(&[
        "series",
        "--gf",
        "semiperimeter",
        "--order",
        "8",
        "--verify",
    ]);
    assert_eq!(code(&o), 5);
    assert_eq!(json(&o)["verified_against_oracle"], false);
    assert!(stderr(&o).contains("theorem check failed"));
}

#[test]
fn series_rejects_zero_order() {
    assert_eq!(code(&lab(&["series", "--gf", "area", "--order", "0"])), 2);
    assert_eq!(code(&lab(&["series", "--gf", "bogus", "--order", "3"])), 2);
}

#[test]
fn verify_passing_suites() {
    for (suite, size) in [
        ("corollary-2-13", "12"),
        ("cf", "11"),
        ("bijections", "8"),
        ("columns", "10"),
    ] {
        let o = lab(&["verify", "--suite", suite, "--max-size", size]);
        assert_eq!(code(&o), 0, "{suite}: {}", stderr(&o));
        let report = json(&o);
        assert_eq!(report["suite"], suite);
        let checks = report["checks"].as_array().unwrap();
        assert!(!checks.is_empty());
        for c in checks {
            assert_eq!(c["status"], "pass");
            for key in ["name", "expected", "actual"] {
                assert!(c.get(key).is_some());
            }
        }
    }
}

#[test]
fn verify_transport_reports_the_single_cell() {
    let o = lab(&["verify", "--suite", "table1", "--max-size", "9"]);
    assert_eq!(code(&o), 1);
    let report = json(&o);
    let failed: Vec<&Value> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .collect();
    assert_eq!(failed.len(), 3);
    for c in failed {
        assert_eq!(c["actual"]["violations"], 1);
        assert_eq!(
            c["actual"]["examples"][0],
            serde_json::json!({"rows": [[0, 1]]})
        );
    }
}

#[test]
fn verify_is_deterministic_across_jobs_and_cache() {
    let args = ["verify", "--suite", "bijections", "--max-size", "8"];
    let base = lab(&args);
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    for extra in [
        vec![],
        vec!["--jobs", "4"],
        vec!["--cache-dir", cache],
        vec!["--cache-dir", cache, "--jobs", "3"],
    ] {
        let o = lab(&[&args[..], &extra[..]].concat());
        assert_eq!(o.stdout, base.stdout, "{extra:?}");
        assert_eq!(code(&o), code(&base));
    }
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let config = dir.path().join("lab.conf");
    std::fs::write(
        &config,
        format!("# defaults\ncache_dir = {}\njobs = 2\n", cache.display()),
    )
    .unwrap();
    let env = [("STANLEY_LAB_CONFIG", config.to_str().unwrap())];
    let args = [
        "enumerate",
        "--family",
        "dyck",
        "--measure",
        "semilength",
        "--value",
        "5",
    ];
    let o = lab_with(&args, "", &env);
    assert_eq!(code(&o), 0);
    assert_eq!(lines(&o).len(), 42);
    assert!(
        std::fs::read_dir(&cache).unwrap().next().is_some(),
        "config cache_dir is used"
    );

    let other = dir.path().join("other");
    let o = lab_with(
        &[&args[..], &["--cache-dir", other.to_str().unwrap()]].concat(),
        "",
        &env,
    );
    assert_eq!(code(&o), 0);
    assert!(
        std::fs::read_dir(&other).unwrap().next().is_some(),
        "flag overrides config"
    );

    std::fs::write(&config, "threads = 2\n").unwrap();
    let o = lab_with(&args, "", &env);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("unknown key"));
}

#[test]
fn output_is_byte_identical_unless_timestamped() {
    let args = ["series", "--gf", "cf-specializations", "--order", "6"];
    assert_eq!(lab(&args).stdout, lab(&args).stdout);
    let stamped = lab(&[&["--timestamps"][..], &args[..]].concat());
    assert_eq!(code(&stamped), 0);
    let out = lines(&stamped);
    assert_eq!(out.len(), 2);
    let head: Value = serde_json::from_str(&out[0]).unwrap();
    assert!(head["timestamp"].as_u64().unwrap() > 0);
    assert_eq!(format!("{}\n", out[1]).into_bytes(), lab(&args).stdout);
}
