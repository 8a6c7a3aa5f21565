use wicket_cli::{run, CommandResult};
use wicket_core::artin::braids_equal;
use wicket_core::braid::BraidWord;
use wicket_core::dilatation::truncate_decimals;

const TABLE: [f64; 16] = [
    2.26844, 1.56362, 1.36516, 1.27074, 1.21532, 1.17882, 1.15293, 1.13361, 1.11863, 1.10668,
    1.09692, 1.08879, 1.08193, 1.07605, 1.07096, 1.06651,
];

fn wicket(args: &[&str]) -> CommandResult {
    let mut argv = vec!["wicket"];
    argv.extend_from_slice(args);
    run(argv)
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut argv = args.to_vec();
    argv.extend(["--format", "json"]);
    let out = wicket(&argv);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).expect("valid json")
}

#[test]
fn table_csv_matches_reference_values() {
    let out = wicket(&["table", "--max-n", "15", "--format", "csv"]);
    assert_eq!(out.code, 0);
    let mut reader = csv::Reader::from_reader(out.stdout.as_bytes());
    let headers = reader.headers().unwrap().clone();
    assert_eq!(
        headers.iter().collect::<Vec<_>>(),
        [
            "n",
            "strands_high",
            "strands_low",
            "lambda",
            "normalized_entropy"
        ]
    );
    let records: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(records.len(), 17);
    assert_eq!(&records[0][0], "");
    assert_eq!(&records[0][1], "6");
    for (n, expected) in TABLE.iter().enumerate() {
        let r = &records[n + 1];
        assert_eq!(r[0].parse::<usize>().unwrap(), n);
        assert_eq!(r[1].parse::<usize>().unwrap(), 4 * n + 8);
        if n == 0 {
            assert_eq!(&r[2], "");
        } else {
            assert_eq!(r[2].parse::<usize>().unwrap(), 4 * n + 6);
        }
        let lambda: f64 = r[3].parse().unwrap();
        assert!((lambda - expected).abs() < 1e-5, "n={n}: {lambda}");
        assert_eq!(truncate_decimals(lambda, 5), format!("{expected:.5}"));
    }
}

#[test]
fn table_text_shows_five_decimals() {
    let out = wicket(&["table", "--max-n", "2"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("2.26844"));
    assert!(out.stdout.contains("1.56362"));
    assert!(out.stdout.contains("12,10"));
}

#[test]
fn dilatation_json_schema() {
    let v = json(&["dilatation", "--strands", "12"]);
    assert_eq!(v["strands"], 12);
    assert_eq!(v["n"], 1);
    let lambda = v["lambda"].as_f64().unwrap();
    assert!((lambda - 1.56362).abs() < 1e-5);
    let lo = v["lambda_bracket"][0].as_f64().unwrap();
    let hi = v["lambda_bracket"][1].as_f64().unwrap();
    assert!(lo <= lambda && lambda <= hi);
    assert_eq!(v["polynomial"].as_array().unwrap().len(), 16);
    for key in ["log_lambda", "normalized_entropy"] {
        assert!(v[key].is_f64(), "{key}");
    }
}

#[test]
fn odd_and_low_strand_counts_are_domain_errors() {
    for s in ["3", "4", "7"] {
        let out = wicket(&["dilatation", "--strands", s]);
        assert_eq!(out.code, 1, "strands {s}");
        assert!(out.stdout.is_empty());
        assert!(out.stderr.starts_with("error:"));
    }
}

#[test]
fn ten_and_twelve_strands_share_lambda() {
    let a = json(&["dilatation", "--strands", "10"]);
    let b = json(&["dilatation", "--strands", "12"]);
    assert_eq!(a["lambda"], b["lambda"]);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["bogus"][..],
        &["table", "--max-n", "x"],
        &["dilatation"],
        &["table", "--format", "xml"],
        &["table", "--tol", "-1"],
    ] {
        let out = wicket(args);
        assert_eq!(out.code, 2, "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn help_goes_to_stdout() {
    let out = wicket(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("abelianization"));
    assert!(out.stderr.is_empty());
}

#[test]
fn abelianization_text() {
    let out = wicket(&["abelianization", "--genus", "3"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.trim(), "Z + Z/2 + Z/2");
    let v = json(&["abelianization", "--genus", "4"]);
    assert_eq!(v["free_rank"], 1);
    assert_eq!(v["torsion"], serde_json::json!([2, 2]));
    assert_eq!(wicket(&["abelianization", "--genus", "1"]).code, 1);
}

#[test]
fn braid_equal_reports_true() {
    let out = wicket(&["braid", "equal", "--strands", "3", "1 2 1", "2 1 2"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("true"));
    let v = json(&["braid", "equal", "--strands", "3", "1 2", "2 1"]);
    assert_eq!(v["equal"], false);
}

#[test]
fn negative_letters_are_words_not_flags() {
    let v = json(&["braid", "expsum", "--strands", "4", "-1 -2 3"]);
    assert_eq!(v["exponent_sum"], -1);
    let v = json(&["braid", "perm", "--strands", "6", "1 -2 3"]);
    assert_eq!(v["permutation"], "(1 2 3 4)(5)(6)");
}

#[test]
fn bad_letter_is_domain_error() {
    let out = wicket(&["braid", "perm", "--strands", "3", "1 5"]);
    assert_eq!(out.code, 1);
    let out = wicket(&["braid", "perm", "--strands", "3", "1 a"]);
    assert_eq!(out.code, 1);
}

#[test]
fn printed_braids_round_trip() {
    for (kind, n) in [
        ("w6", 0),
        ("x4n8", 2),
        ("y4n8", 1),
        ("w4n8", 1),
        ("w4n6", 2),
        ("x4n6", 1),
    ] {
        let v = json(&["braid", "family", "--kind", kind, "--n", &n.to_string()]);
        let strands = v["strands"].as_u64().unwrap() as usize;
        let word = v["word"].as_str().unwrap().to_string();
        let original = BraidWord::parse(&word, strands).unwrap();
        let echoed = json(&["braid", "expsum", "--strands", &strands.to_string(), &word]);
        let reparsed = BraidWord::parse(echoed["word"].as_str().unwrap(), strands).unwrap();
        assert_eq!(original, reparsed);
        assert!(braids_equal(&original, &reparsed).unwrap());
        let eq = json(&[
            "braid",
            "equal",
            "--strands",
            &strands.to_string(),
            &word,
            &word,
        ]);
        assert_eq!(eq["equal"], true);
    }
}

#[test]
fn closure_of_underlined_w6() {
    let w6 = json(&["braid", "family", "--kind", "w6"]);
    let word = w6["word"].as_str().unwrap();
    let v = json(&["braid", "closure", "--strands", "6", "--underline", word]);
    assert_eq!(v["closure_components"], 3);
}

#[test]
fn matrix_and_charpoly() {
    let v = json(&["matrix"]);
    assert_eq!(v["dim"], 6);
    assert_eq!(v["rows"].as_array().unwrap().len(), 6);
    let v = json(&["charpoly"]);
    assert_eq!(v["polynomial"], serde_json::json!([1, -4, 3, 0, 3, -4, 1]));
    assert_eq!(v["primitive"], true);
    assert_eq!(v["witness"], 5);
    let v = json(&["charpoly", "--n", "2"]);
    assert_eq!(v["matches_family_polynomial"], true);
}

#[test]
fn validate_and_prongs() {
    let v = json(&["validate", "--max-n", "3"]);
    assert_eq!(v["all_passed"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 4);
    let v = json(&["prongs", "--n", "3"]);
    assert_eq!(v["euler_poincare_sum"], 4);
    assert_eq!(v["interior_three_prongs"], 9);
}

#[test]
fn convergence_csv_columns() {
    let out = wicket(&["convergence", "--max-n", "10", "--format", "csv"]);
    assert_eq!(out.code, 0);
    let mut reader = csv::Reader::from_reader(out.stdout.as_bytes());
    assert_eq!(
        reader.headers().unwrap().iter().collect::<Vec<_>>(),
        ["n", "lambda", "normalized_entropy", "gap"]
    );
    let gaps: Vec<f64> = reader
        .records()
        .map(|r| r.unwrap()[3].parse().unwrap())
        .collect();
    assert_eq!(gaps.len(), 11);
    assert!(gaps.windows(2).all(|w| w[1] < w[0]));
}

#[test]
fn presentation_json_schema() {
    let v = json(&["presentation", "--genus", "2"]);
    assert_eq!(
        v["generators"],
        serde_json::json!(["r1", "r2", "s1", "s2", "t1", "t2", "t3"])
    );
    let relators = v["relators"].as_array().unwrap();
    assert_eq!(relators.len(), v["families"].as_array().unwrap().len());
    let first = &relators[0].as_array().unwrap()[0];
    assert!(first[0].is_string() && first[1].is_i64());
}

#[test]
fn relations_for_genus_two() {
    let v = json(&["relations", "--genus", "2"]);
    assert_eq!(v["disk_relations_hold"], true);
    assert_eq!(v["partial"], false);
    for c in v["checks"].as_array().unwrap() {
        assert_ne!(c["status"], "fails");
    }
}

#[test]
fn output_is_deterministic() {
    let a = wicket(&["table", "--max-n", "6", "--format", "json"]);
    let b = wicket(&["table", "--max-n", "6", "--format", "json"]);
    assert_eq!(a, b);
}

#[test]
fn relations_beyond_cap_exit_three() {
    let out = wicket(&["relations", "--genus", "3", "--max-genus", "2"]);
    assert_eq!(out.code, 3);
    assert!(out.stderr.starts_with("error:"));
}
