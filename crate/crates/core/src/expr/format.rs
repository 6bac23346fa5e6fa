use super::GammaExpr;

/// Renders an expression so that `parse(format(e)) == e.normalized()`.
pub fn format(e: &GammaExpr) -> String {
    let mut out = String::new();
    write_expr(&e.normalized(), &mut out);
    out
}

fn write_expr(e: &GammaExpr, out: &mut String) {
    match e {
        GammaExpr::Product(items) => {
            for (k, item) in items.iter().enumerate() {
                if k > 0 {
                    out.push('*');
                }
                write_term(item, out);
            }
        }
        other => write_term(other, out),
    }
}

fn write_term(e: &GammaExpr, out: &mut String) {
    match e {
        GammaExpr::Negate(inner) => {
            out.push('-');
            write_factor(inner, out);
        }
        other => write_factor(other, out),
    }
}

fn write_factor(e: &GammaExpr, out: &mut String) {
    match e {
        GammaExpr::Generator(g) => out.push_str(g.name()),
        GammaExpr::Identity => out.push('I'),
        GammaExpr::ImaginaryUnit => out.push('i'),
        GammaExpr::Integer(n) => out.push_str(&n.to_string()),
        GammaExpr::Star(inner) => write_call("star", inner, out),
        GammaExpr::Transpose(inner) => write_call("transpose", inner, out),
        GammaExpr::Dagger(inner) => write_call("dagger", inner, out),
        GammaExpr::Negate(_) | GammaExpr::Product(_) => {
            out.push('(');
            write_expr(e, out);
            out.push(')');
        }
    }
}

fn write_call(name: &str, inner: &GammaExpr, out: &mut String) {
    out.push_str(name);
    out.push('(');
    write_expr(inner, out);
    out.push(')');
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::Generator::*;
    use crate::expr::parse;
    use GammaExpr::*;

    #[test]
    fn serializes_leaves_and_wrappers() {
        assert_eq!(format(&Product(vec![ImaginaryUnit, Generator(G0)])), "i*g0");
        assert_eq!(format(&GammaExpr::negate(Generator(G2))), "-g2");
        assert_eq!(format(&Dagger(Box::new(Generator(G1)))), "dagger(g1)");
        assert_eq!(format(&GammaExpr::negate(GammaExpr::negate(Identity))), "-(-I)");
        let nested = Product(vec![Generator(G0), Product(vec![Generator(G1), Generator(G2)])]);
        assert_eq!(format(&nested), "g0*(g1*g2)");
        assert_eq!(format(&GammaExpr::negate(nested.clone())), "-(g0*(g1*g2))");
        assert_eq!(parse(&format(&nested)).unwrap(), nested);
    }
}
