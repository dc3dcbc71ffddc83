mod common;

#[test]
fn every_scenario_matches_its_golden_files() {
    let bless = common::blessing();
    let scenarios = common::scenarios();
    assert!(scenarios.len() >= 12, "only {} scenarios", scenarios.len());
    let failures: Vec<String> = scenarios
        .iter()
        .filter_map(|dir| {
            common::check_scenario(dir, bless)
                .err()
                .map(|e| format!("[{}] {e}", dir.file_name().unwrap().to_string_lossy()))
        })
        .collect();
    assert!(failures.is_empty(), "{}", failures.join("\n\n"));
}

#[test]
fn every_subcommand_has_success_domain_and_usage_scenarios() {
    let mut seen = std::collections::BTreeSet::new();
    for dir in common::scenarios() {
        let args = std::fs::read_to_string(dir.join("args")).unwrap_or_default();
        let code = std::fs::read_to_string(dir.join("code")).unwrap();
        let sub = args.lines().next().unwrap_or("").to_string();
        seen.insert((sub, code.trim().to_string()));
    }
    for sub in ["validate", "check", "diff"] {
        for code in ["0", "1", "2"] {
            assert!(
                seen.contains(&(sub.to_string(), code.to_string())),
                "{sub} lacks exit {code}"
            );
        }
    }
    // scaffold has no domain-negative outcome
    for code in ["0", "2"] {
        assert!(seen.contains(&("scaffold".to_string(), code.to_string())));
    }
}

#[test]
fn color_is_off_under_no_color_and_output_is_plain() {
    for dir in common::scenarios() {
        for file in ["stdout", "stderr"] {
            let text = std::fs::read_to_string(dir.join(file)).unwrap_or_default();
            assert!(!text.contains('\x1b'), "{} has styling bytes", dir.display());
        }
    }
}
