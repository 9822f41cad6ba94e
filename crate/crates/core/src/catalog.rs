//! Small named modules used by tests, benches and the command line.

use crate::exact::{frac, int};
use crate::spec::{ModuleSpec, YangianFactor};

pub struct CatalogEntry {
    pub name: &'static str,
    pub spec: ModuleSpec,
}

fn factor(lambda: &[i64], mu: &[i64], h: crate::exact::Rational) -> YangianFactor {
    YangianFactor::new(lambda.to_vec(), mu.to_vec(), h)
}

/// All entries, smallest first. Shift differences are never integral.
pub fn catalog() -> Vec<CatalogEntry> {
    let build = |name, n, factors| CatalogEntry { name, spec: ModuleSpec::new(n, factors).expect("catalog entry is valid") };
    vec![
        build("c2", 2, vec![factor(&[1, 0], &[], int(0))]),
        build("c2xc2", 2, vec![factor(&[1, 0], &[], int(0)), factor(&[1, 0], &[], frac(1, 2))]),
        build("pinned-n2", 2, vec![factor(&[3, 1, 0], &[2], frac(1, 3))]),
        build("sym2xc2", 2, vec![factor(&[2, 0], &[], int(0)), factor(&[1, 0], &[], frac(1, 2))]),
        build("adjoint-n3", 3, vec![factor(&[2, 1, 0], &[], int(0))]),
        build("c3xc3", 3, vec![factor(&[1, 0, 0], &[], int(0)), factor(&[1, 0, 0], &[], frac(1, 3))]),
        build("pinned-n3", 3, vec![factor(&[2, 1, 0, 0], &[1], frac(1, 4))]),
        build("pinned-x-c2", 2, vec![factor(&[2, 1, 0], &[1], frac(1, 3)), factor(&[1, 0], &[], int(0))]),
    ]
}

pub fn lookup(name: &str) -> Option<ModuleSpec> {
    catalog().into_iter().find(|e| e.name == name).map(|e| e.spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries_are_generic_and_named_uniquely() {
        let all = catalog();
        for e in &all {
            assert!(e.spec.is_generic(), "{}", e.name);
            assert_eq!(all.iter().filter(|x| x.name == e.name).count(), 1);
        }
        assert_eq!(lookup("pinned-n2").unwrap().dim(), 4);
        assert_eq!(lookup("adjoint-n3").unwrap().dim(), 8);
        assert!(lookup("missing").is_none());
    }
}
