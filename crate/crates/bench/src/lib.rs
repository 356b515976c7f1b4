//! Shared fixtures for the benchmarks.

use og4_core::families::{FamilySpec, Orientation, Variant};
use og4_core::OrientedPair;

/// Named family members of increasing size.
pub fn fixtures() -> Vec<(String, OrientedPair)> {
    let specs = [
        FamilySpec::gamma(5, 6, Variant::G, Orientation::Con1),
        FamilySpec::gamma(7, 8, Variant::H, Orientation::Con2c),
        FamilySpec::gamma_plus(6, 8, Variant::G, Orientation::Con1),
        FamilySpec::double(5, 7),
        FamilySpec::lex_cycle(6),
    ];
    specs.iter().map(|s| (s.label(), s.build().expect("fixture builds"))).collect()
}

#[cfg(test)]
mod tests {
    #[test]
    fn fixtures_build() {
        assert_eq!(super::fixtures().len(), 5);
    }
}
