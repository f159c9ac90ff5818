//! Unit products of both algebras and the component form of a 4×4 matrix.

use symplectica::clifford::{
    numbered_unit_map, dirac_rep, mul_units, pauli_rep, CliffordElement4, DiracUnit, PauliUnit, UnitId,
};
use symplectica::smallmat::Mat4;

fn main() -> symplectica::Result<()> {
    println!("2×2 units:");
    for a in PauliUnit::ALL {
        let row: Vec<String> = PauliUnit::ALL
            .iter()
            .map(|&b| {
                let p = mul_units(a.into(), b.into()).unwrap();
                let UnitId::Pauli(c) = p.unit else {
                    unreachable!()
                };
                format!("{}{c:?}", if p.sign < 0 { "-" } else { "+" })
            })
            .collect();
        println!("  {a:?}: {}", row.join(" "));
    }
    println!("γ = {:?}", pauli_rep(PauliUnit::Gamma));

    let z1 = DiracUnit::zeta(1)?;
    let g1 = DiracUnit::gamma(1)?;
    let p = mul_units(z1.into(), g1.into())?;
    println!("\n{z1} · {g1} = {}{:?}", p.sign, p.unit);
    let squares: Vec<String> = DiracUnit::all()
        .map(|u| {
            let sq = dirac_rep(u) * dirac_rep(u);
            format!("{u}²={}", if sq == Mat4::identity() { "+1" } else { "-1" })
        })
        .collect();
    println!("{}", squares.join("  "));

    println!("\nnumbered units:");
    for n in 0..16 {
        let s = numbered_unit_map(n)?;
        if let UnitId::Dirac(u) = s.unit {
            println!("  {n:>2} -> {}{u}", if s.sign < 0 { "-" } else { "+" });
        }
    }

    let m = Mat4::from_rows([
        [1.0, 2.0, 0.0, -1.0],
        [0.5, 3.0, 1.0, 0.0],
        [0.0, -2.0, 1.0, 4.0],
        [1.0, 0.0, 0.0, 2.0],
    ]);
    let z = CliffordElement4::decompose(&m);
    println!("\ncomponents of M:");
    for row in z.c {
        println!("  {row:>8.3?}");
    }
    assert_eq!(z.compose(), m);
    Ok(())
}
