token_enum! {
    /// Four-level ordinal scale used for ility levels and solution-space flexibility.
    pub enum Level {
        None => "None",
        Low => "Low",
        Medium => "Medium",
        High => "High",
    }
}

token_enum! {
    /// Sensitivity of an adaptive component to its prior.
    pub enum Sensitivity {
        Low => "Low",
        Medium => "Medium",
        High => "High",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scales_are_totally_ordered() {
        for window in Level::ALL.windows(2) {
            assert!(window[0] < window[1]);
        }
        for window in Sensitivity::ALL.windows(2) {
            assert!(window[0] < window[1]);
        }
        for a in Level::ALL {
            for b in Level::ALL {
                if a <= b && b <= a {
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn tokens_parse_back() {
        for level in Level::ALL {
            assert_eq!(level.as_str().parse::<Level>().unwrap(), *level);
        }
        assert!("Extreme".parse::<Level>().is_err());
    }
}
