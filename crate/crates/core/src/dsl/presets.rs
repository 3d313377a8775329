//! Built-in algebra definitions, stored as DSL text and parsed on demand
//! so the grammar is exercised by every run.

use thiserror::Error;

use crate::algebra::AlgebraSpec;
use crate::dsl::spec::parse_spec;

pub const PRESET_NAMES: [&str; 5] =
    ["witt", "virasoro", "thv-centerless", "ns2-centerless", "ns2-central"];

#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("unknown preset '{0}' (available: witt, virasoro, thv-centerless, ns2-centerless, ns2-central)")]
pub struct UnknownPreset(pub String);

const WITT: &str = "\
# Witt algebra of polynomial vector fields on the circle
algebra witt {
  generators {
    L(m): even, lattice Z;
  }
  brackets {
    [L(m), L(n)] = (m-n)*L(m+n);
  }
}
";

const VIRASORO: &str = "\
# Universal central extension of the Witt algebra
algebra virasoro {
  generators {
    L(m): even, lattice Z;
    C: even, central;
  }
  brackets {
    [L(m), L(n)] = (m-n)*L(m+n) + (1/12*m^3-1/12*m)*C delta(m+n);
  }
}
";

const THV_CENTERLESS: &str = "\
# Centerless twisted Heisenberg-Virasoro algebra
algebra thv-centerless {
  generators {
    L(m): even, lattice Z;
    I(m): even, lattice Z;
  }
  brackets {
    [L(m), L(n)] = (m-n)*L(m+n);
    [L(m), I(n)] = -n*I(m+n);
    [I(m), I(n)] = 0;
  }
}
";

const NS2_CENTERLESS: &str = "\
# Centerless N=2 superconformal algebra, Neveu-Schwarz sector
algebra ns2-centerless {
  generators {
    L(m): even, lattice Z;
    I(m): even, lattice Z;
    G+(r): odd, lattice Z+1/2;
    G-(r): odd, lattice Z+1/2;
  }
  brackets {
    [L(m), L(n)] = (m-n)*L(m+n);
    [L(m), I(n)] = -n*I(m+n);
    [L(m), G+(r)] = (1/2*m-r)*G+(m+r);
    [L(m), G-(r)] = (1/2*m-r)*G-(m+r);
    [I(m), I(n)] = 0;
    [I(m), G+(r)] = G+(m+r);
    [I(m), G-(r)] = -G-(m+r);
    [G+(r), G+(s)] = 0;
    [G+(r), G-(s)] = 2*L(r+s) + (r-s)*I(r+s);
    [G-(r), G-(s)] = 0;
  }
}
";

const NS2_CENTRAL: &str = "\
# N=2 superconformal algebra, Neveu-Schwarz sector, with central charge
algebra ns2-central {
  generators {
    L(m): even, lattice Z;
    I(m): even, lattice Z;
    G+(r): odd, lattice Z+1/2;
    G-(r): odd, lattice Z+1/2;
    C: even, central;
  }
  brackets {
    [L(m), L(n)] = (m-n)*L(m+n) + (1/12*m^3-1/12*m)*C delta(m+n);
    [L(m), I(n)] = -n*I(m+n);
    [L(m), G+(r)] = (1/2*m-r)*G+(m+r);
    [L(m), G-(r)] = (1/2*m-r)*G-(m+r);
    [I(m), I(n)] = 1/3*m*C delta(m+n);
    [I(m), G+(r)] = G+(m+r);
    [I(m), G-(r)] = -G-(m+r);
    [G+(r), G+(s)] = 0;
    [G+(r), G-(s)] = 2*L(r+s) + (r-s)*I(r+s) + (1/3*r^2-1/12)*C delta(r+s);
    [G-(r), G-(s)] = 0;
  }
}
";

pub fn preset(name: &str) -> Result<AlgebraSpec, UnknownPreset> {
    let text = match name {
        "witt" => WITT,
        "virasoro" => VIRASORO,
        "thv-centerless" => THV_CENTERLESS,
        "ns2-centerless" => NS2_CENTERLESS,
        "ns2-central" => NS2_CENTRAL,
        other => return Err(UnknownPreset(other.to_string())),
    };
    Ok(parse_spec(text).expect("built-in preset text must parse"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::key::Family;

    #[test]
    fn all_presets_parse() {
        for name in PRESET_NAMES {
            let spec = preset(name).unwrap();
            assert_eq!(spec.name, name);
        }
    }

    #[test]
    fn ns2_central_shape() {
        let spec = preset("ns2-central").unwrap();
        assert_eq!(spec.families().count(), 5);
        assert_eq!(spec.rules().len(), 10);
        assert!(spec.has_central());
    }

    #[test]
    fn thv_shape() {
        let spec = preset("thv-centerless").unwrap();
        let fams: Vec<Family> = spec.families().map(|d| d.family).collect();
        assert_eq!(fams, vec![Family::L, Family::I]);
        assert_eq!(spec.rules().len(), 3);
    }

    #[test]
    fn witt_shape() {
        let spec = preset("witt").unwrap();
        assert_eq!(spec.families().count(), 1);
        assert!(preset("nosuch").is_err());
    }

    #[test]
    fn centerless_is_central_without_c() {
        let with = preset("ns2-central").unwrap();
        let without = preset("ns2-centerless").unwrap();
        assert!(!without.has_central());
        assert_eq!(with.rules().len(), without.rules().len());
    }
}
