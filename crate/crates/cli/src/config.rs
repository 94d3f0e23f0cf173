use std::path::Path;

use serde::Deserialize;
use tabsieve::klcells::DEFAULT_KL_RANK_CAP;
use tabsieve::tabcore::DEFAULT_ENUMERATION_CAP;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    cap: Option<usize>,
    kl_rank_cap: Option<usize>,
}

/// Effective limits: flag or environment first, then the config file, then defaults.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub cap: usize,
    pub kl_rank_cap: usize,
}

impl Limits {
    pub fn resolve(cap: Option<usize>, kl_rank_cap: Option<usize>, file: Option<&Path>) -> Result<Limits, String> {
        let from_file = match file {
            None => FileConfig::default(),
            Some(p) => {
                let text = std::fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display()))?;
                toml::from_str(&text).map_err(|e| format!("bad config {}: {e}", p.display()))?
            }
        };
        Ok(Limits {
            cap: cap.or(from_file.cap).unwrap_or(DEFAULT_ENUMERATION_CAP),
            kl_rank_cap: kl_rank_cap.or(from_file.kl_rank_cap).unwrap_or(DEFAULT_KL_RANK_CAP),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let dir = std::env::temp_dir().join(format!("tabsieve-config-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("limits.toml");
        std::fs::write(&path, "cap = 50\nkl_rank_cap = 4\n").unwrap();
        let l = Limits::resolve(None, None, Some(&path)).unwrap();
        assert_eq!((l.cap, l.kl_rank_cap), (50, 4));
        let l = Limits::resolve(Some(7), None, Some(&path)).unwrap();
        assert_eq!((l.cap, l.kl_rank_cap), (7, 4));
        let l = Limits::resolve(None, None, None).unwrap();
        assert_eq!((l.cap, l.kl_rank_cap), (DEFAULT_ENUMERATION_CAP, DEFAULT_KL_RANK_CAP));
        std::fs::write(&path, "caps = 1\n").unwrap();
        assert!(Limits::resolve(None, None, Some(&path)).is_err());
        std::fs::remove_dir_all(&dir).ok();
    }
}
