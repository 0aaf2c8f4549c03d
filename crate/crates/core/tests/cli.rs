//! End-to-end checks of the CLI surface: output schemas, exit codes, and
//! name/epoch parsing ergonomics.

use std::process::{Command, Output};

fn vjcal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vjcal"))
        .args(args)
        .output()
        .expect("vjcal runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn yuga_table_csv_has_124_rows() {
    let out = vjcal(&["yuga", "table", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "fortnight,moon_segment,moon_progress,moon_mixed,moon_name,sun_segment,sun_progress,sun_mixed,sun_name"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 124);
    assert!(rows[0].starts_with("1,14,73/124,14 73/124,"));
    assert!(rows[123].starts_with("124,0,0/1,"));
}

#[test]
fn yuga_table_rejects_invalid_overrides() {
    let out = vjcal(&["yuga", "table", "--fortnights", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
}

#[test]
fn unknown_flag_is_usage_error() {
    let out = vjcal(&["yuga", "table", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn moon_position_json_fields() {
    let out = vjcal(&["moon-position", "--fortnight", "1", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["segment"], 14);
    assert_eq!(v["progress"], "73/124");
    assert_eq!(v["mixed"], "14 73/124");
    assert_eq!(v["name"], "Maghā");
}

#[test]
fn moon_position_is_periodic_across_yugas() {
    let a = vjcal(&["moon-position", "--fortnight", "1", "--format", "json"]);
    let b = vjcal(&["moon-position", "--fortnight", "125", "--format", "json"]);
    let va: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    let vb: serde_json::Value = serde_json::from_str(&stdout(&b)).unwrap();
    assert_eq!(va["segment"], vb["segment"]);
    assert_eq!(va["progress"], vb["progress"]);
}

#[test]
fn moon_position_fortnight_zero() {
    let out = vjcal(&["moon-position", "--fortnight", "0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["segment"], 0);
    assert_eq!(v["progress"], "0/1");
    assert_eq!(v["name"], "Dhaniṣṭhā");
}

#[test]
fn sun_position_first_fortnight() {
    let out = vjcal(&["sun-position", "--fortnight", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["segment"], 1);
    assert_eq!(v["progress"], "11/124");
}

#[test]
fn negative_fortnight_is_usage_error() {
    let out = vjcal(&["moon-position", "--fortnight", "-1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn date_with_diacritic_insensitive_names() {
    let out = vjcal(&[
        "date",
        "--from",
        "Dhanistha:0",
        "--to",
        "Uttarasadha:1/4",
        "--epoch",
        "530CE",
        "--format",
        "json",
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["elapsed_years_exact"], "1680/1");
    assert_eq!(v["elapsed_years_rounded"], 1680);
    assert_eq!(v["date"]["label"], "1151 BCE");
    assert_eq!(v["date"]["astronomical"], -1150);
    assert_eq!(v["longitude_a"]["dms"], "293°20′");
    assert_eq!(v["separation"], "70/3");
}

#[test]
fn date_identical_points_returns_epoch() {
    let out = vjcal(&[
        "date",
        "--from",
        "5:1/2",
        "--to",
        "5:1/2",
        "--epoch",
        "1887CE",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["date"]["label"], "1887 CE");
    assert_eq!(v["elapsed_years_exact"], "0/1");
}

#[test]
fn date_error_band_spans_twice_the_drift() {
    let out = vjcal(&[
        "date",
        "--from",
        "Dhanistha:0",
        "--to",
        "Uttarasadha:1/4",
        "--epoch",
        "530CE",
        "--error-deg",
        "2",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["sensitivity"]["error_deg"], "2/1");
    assert_eq!(v["sensitivity"]["band"][0], "1295 BCE");
    assert_eq!(v["sensitivity"]["band"][1], "1007 BCE");
}

#[test]
fn date_unknown_name_is_usage_error() {
    let out = vjcal(&["date", "--from", "Atlantis:0", "--to", "5:0", "--epoch", "530CE"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sensitivity_output() {
    let out = vjcal(&["sensitivity", "--error-deg", "3", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        "error_deg,years_per_degree,drift_years\n3/1,72/1,216/1"
    );
}

#[test]
fn compare_models_sweep() {
    let out = vjcal(&["compare-models", "--max", "248", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "fortnight,tally_units,tally_circle,rational_position,agree"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 249);
    assert!(rows.iter().all(|r| r.ends_with(",true")));
    assert_eq!(rows[1], "1,1809,3348,1809/124,true");

    let out = vjcal(&["compare-models", "--max", "0", "--format", "csv"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 2);
}

#[test]
fn decompose_and_tax() {
    let out = vjcal(&["decompose", "--rational", "73/124", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["denominators"], serde_json::json!(["2", "12", "186"]));
    assert_eq!(v["sum"], "73/124");

    let out = vjcal(&["decompose", "--rational", "5/4"]);
    assert_eq!(out.status.code(), Some(1)); // domain error: not in (0,1)

    let out = vjcal(&["tax", "--measures", "12", "--format", "csv"]);
    assert_eq!(stdout(&out).trim(), "measures,tax,remainder\n12,2,0");
}

#[test]
fn intercalary_schedules() {
    let out = vjcal(&["yuga", "intercalary", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["months"], serde_json::json!([31, 62]));

    let out = vjcal(&["yuga", "intercalary", "--policy", "end-of-yuga-only", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["months"], serde_json::json!([61, 62]));

    let out = vjcal(&["yuga", "intercalary", "--policy", "explicit", "--months", "10,63"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn names_file_and_config_are_honored() {
    let dir = std::env::temp_dir().join(format!("vjcal-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let names_path = dir.join("names.txt");
    let names: Vec<String> = (0..27).map(|i| format!("Seg{i}")).collect();
    std::fs::write(&names_path, names.join("\n")).unwrap();

    let out = vjcal(&[
        "moon-position",
        "--fortnight",
        "1",
        "--names",
        names_path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["name"], "Seg14");

    // config supplies the names file; flags still win
    let config_path = dir.join("config.toml");
    std::fs::write(
        &config_path,
        format!("names = {:?}\nerror_deg = \"2\"\n", names_path.to_str().unwrap()),
    )
    .unwrap();
    let out = vjcal(&[
        "moon-position",
        "--fortnight",
        "1",
        "--config",
        config_path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["name"], "Seg14");

    // truncated names file is rejected
    std::fs::write(&names_path, "only\nthree\nnames").unwrap();
    let out = vjcal(&[
        "moon-position",
        "--fortnight",
        "1",
        "--names",
        names_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));

    std::fs::remove_dir_all(&dir).ok();
}
