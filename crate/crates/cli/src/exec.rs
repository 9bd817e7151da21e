//! Execution of parsed scripts: builds the declared objects, validates
//! them eagerly, and prints deterministic canonical output for `eval`,
//! `check`, and `laws`.

use std::collections::HashMap;
use std::io::Write;
use std::sync::Arc;

use subschemes::report::Status;
use subschemes::scheme::{GluedScheme, PatchMap, SchemeMorphism};
use subschemes::subscheme::ClosedSubscheme;
use subschemes::text::{parse_polynomial_with, InverseHook};
use subschemes::{laws, localize, AffineAlgebra, Ideal, MonomialOrder, Poly, RingMap};

use crate::script::{line_col, Expr, MapKey, Script, Span, Statement};

pub struct Options {
    pub cocycle_check: bool,
    pub order: MonomialOrder,
    pub laws_max_n: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            cocycle_check: false,
            order: MonomialOrder::GrevLex,
            laws_max_n: laws::DEFAULT_MAX_N,
        }
    }
}

/// Exit status of a run: 0 ok, 1 validation or assertion failure, 2 parse
/// error (produced by the caller when parsing fails).
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE_ERROR: i32 = 2;

enum Entity {
    Ring(AffineAlgebra),
    Ideal(Ideal),
    Scheme(Arc<GluedScheme>),
    Morphism(SchemeMorphism),
    Subscheme(ClosedSubscheme),
}

enum Value {
    Subscheme(ClosedSubscheme),
    Ideal(Ideal),
    Bool(bool),
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Subscheme(_) => "subscheme",
            Value::Ideal(_) => "ideal",
            Value::Bool(_) => "boolean",
        }
    }
}

struct ExecError {
    line: usize,
    col: usize,
    message: String,
}

struct Executor<'a> {
    script: &'a Script,
    options: &'a Options,
    env: HashMap<String, Entity>,
    assertion_failed: bool,
}

/// Run a parsed script, writing canonical results to `out` and failure
/// reports to `err`. Returns the process exit code.
pub fn execute(
    script: &Script,
    options: &Options,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let mut exec = Executor {
        script,
        options,
        env: HashMap::new(),
        assertion_failed: false,
    };
    for (stmt, line) in &script.statements {
        match exec.statement(stmt, *line, out) {
            Ok(()) => {}
            Err(e) => {
                writeln!(err, "{}:{}: {}", e.line, e.col, e.message).ok();
                return EXIT_FAILURE;
            }
        }
    }
    if exec.assertion_failed {
        EXIT_FAILURE
    } else {
        EXIT_OK
    }
}

impl<'a> Executor<'a> {
    fn fail(&self, line: usize, message: impl Into<String>) -> ExecError {
        ExecError {
            line,
            col: 1,
            message: message.into(),
        }
    }

    fn parse_span(
        &self,
        span: Span,
        vars: &[String],
        hook: Option<&InverseHook<'_, subschemes::Rational>>,
    ) -> Result<Poly, ExecError> {
        let text = &self.script.source[span.start..span.end];
        parse_polynomial_with(text, vars, hook).map_err(|e| {
            let (line, col) = line_col(&self.script.source, span.start + e.offset);
            ExecError {
                line,
                col,
                message: e.kind.to_string(),
            }
        })
    }

    fn parse_spans(
        &self,
        spans: &[Span],
        vars: &[String],
    ) -> Result<Vec<Poly>, ExecError> {
        spans
            .iter()
            .map(|s| self.parse_span(*s, vars, None))
            .collect()
    }

    fn ring(&self, name: &str) -> &AffineAlgebra {
        match self.env.get(name) {
            Some(Entity::Ring(a)) => a,
            _ => unreachable!("parser checked names"),
        }
    }

    fn scheme(&self, name: &str) -> &Arc<GluedScheme> {
        match self.env.get(name) {
            Some(Entity::Scheme(x)) => x,
            _ => unreachable!("parser checked names"),
        }
    }

    fn morphism(&self, name: &str) -> &SchemeMorphism {
        match self.env.get(name) {
            Some(Entity::Morphism(f)) => f,
            _ => unreachable!("parser checked names"),
        }
    }

    fn named_value(&self, name: &str) -> Value {
        match self.env.get(name) {
            Some(Entity::Subscheme(z)) => Value::Subscheme(z.clone()),
            Some(Entity::Ideal(i)) => Value::Ideal(i.clone()),
            _ => unreachable!("parser checked names"),
        }
    }

    fn statement(
        &mut self,
        stmt: &Statement,
        line: usize,
        out: &mut dyn Write,
    ) -> Result<(), ExecError> {
        match stmt {
            Statement::Ring {
                name,
                vars,
                relations,
            } => {
                let free = AffineAlgebra::free(vars.clone(), self.options.order)
                    .map_err(|e| self.fail(line, e.to_string()))?;
                let rels = self.parse_spans(relations, free.vars())?;
                let algebra = AffineAlgebra::new(vars.clone(), rels, self.options.order)
                    .map_err(|e| self.fail(line, e.to_string()))?;
                self.env.insert(name.clone(), Entity::Ring(algebra));
            }
            Statement::Ideal { name, ring, gens } => {
                let algebra = self.ring(ring).clone();
                let gens = self.parse_spans(gens, algebra.vars())?;
                let ideal =
                    Ideal::new(&algebra, gens).map_err(|e| self.fail(line, e.to_string()))?;
                self.env.insert(name.clone(), Entity::Ideal(ideal));
            }
            Statement::Scheme {
                name,
                patches,
                glues,
            } => {
                let patch_algebras: Vec<AffineAlgebra> =
                    patches.iter().map(|r| self.ring(r).clone()).collect();
                let mut scheme = GluedScheme::new(patch_algebras, Vec::new())
                    .map_err(|e| self.fail(line, e.to_string()))?;
                for glue in glues {
                    self.add_glue(&mut scheme, glue)?;
                }
                let report = scheme.validate(self.options.cocycle_check);
                if !report.is_ok() {
                    return Err(self.fail(
                        line,
                        format!("scheme `{name}` is not valid:\n{report}"),
                    ));
                }
                self.env
                    .insert(name.clone(), Entity::Scheme(Arc::new(scheme)));
            }
            Statement::Morphism {
                name,
                source,
                target,
                patch_maps,
            } => {
                let morphism = self.build_morphism(source, target, patch_maps, line)?;
                let report = morphism.validate();
                if !report.is_ok() {
                    return Err(self.fail(
                        line,
                        format!("morphism `{name}` is not valid:\n{report}"),
                    ));
                }
                self.env.insert(name.clone(), Entity::Morphism(morphism));
            }
            Statement::Subscheme {
                name,
                scheme,
                patch_gens,
            } => {
                let x = Arc::clone(self.scheme(scheme));
                if patch_gens.len() != x.patches().len() {
                    return Err(self.fail(
                        line,
                        format!(
                            "subscheme `{name}` lists {} patch ideals, scheme `{scheme}` has {} patches",
                            patch_gens.len(),
                            x.patches().len()
                        ),
                    ));
                }
                let mut gens = Vec::with_capacity(patch_gens.len());
                for (patch, spans) in x.patches().iter().zip(patch_gens) {
                    gens.push(self.parse_spans(spans, patch.vars())?);
                }
                let z = ClosedSubscheme::new(&x, gens)
                    .map_err(|e| self.fail(line, e.to_string()))?;
                let report = z.validate();
                if !report.is_ok() {
                    return Err(self.fail(
                        line,
                        format!("subscheme `{name}` is not valid:\n{report}"),
                    ));
                }
                self.env.insert(name.clone(), Entity::Subscheme(z));
            }
            Statement::Eval(expr) => {
                let value = self.eval(expr, line)?;
                match value {
                    Value::Subscheme(z) => {
                        writeln!(out, "{}", z.display_string()).ok();
                    }
                    Value::Ideal(i) => {
                        writeln!(out, "{}", i.display_string()).ok();
                    }
                    Value::Bool(b) => {
                        writeln!(out, "{b}").ok();
                        if !b {
                            self.assertion_failed = true;
                        }
                    }
                }
            }
            Statement::Check(name) => {
                let report = match self.env.get(name) {
                    Some(Entity::Scheme(x)) => x.validate(self.options.cocycle_check),
                    Some(Entity::Morphism(f)) => f.validate(),
                    Some(Entity::Subscheme(z)) => z.validate(),
                    _ => unreachable!("parser checked names"),
                };
                write!(out, "{report}").ok();
                if !report.is_ok() {
                    self.assertion_failed = true;
                }
            }
            Statement::Laws { module, seed } => {
                let seed = seed.unwrap_or(laws::DEFAULT_SEED);
                let report = laws::run_module(module, seed, self.options.laws_max_n)
                    .ok_or_else(|| {
                        self.fail(line, format!("unknown law suite `{module}`"))
                    })?;
                write!(out, "{report}").ok();
                if report.entries().iter().any(|e| e.status == Status::Fail) {
                    self.assertion_failed = true;
                }
            }
        }
        Ok(())
    }

    fn add_glue(
        &self,
        scheme: &mut GluedScheme,
        glue: &crate::script::GlueDecl,
    ) -> Result<(), ExecError> {
        let line = glue.line;
        let patches = scheme.patches().len();
        for idx in [glue.i, glue.j] {
            if idx >= patches {
                return Err(self.fail(
                    line,
                    format!("patch index {idx} out of range (scheme has {patches} patches)"),
                ));
            }
        }
        let a_i = scheme.patches()[glue.i].clone();
        let a_j = scheme.patches()[glue.j].clone();
        let f_i = self.parse_span(glue.f_i, a_i.vars(), None)?;
        let f_j = self.parse_span(glue.f_j, a_j.vars(), None)?;
        let (loc_j, _) =
            localize(&a_j, &f_j).map_err(|e| self.fail(line, e.to_string()))?;
        let f_j_embedded = {
            let positions: Vec<usize> = (0..a_j.arity()).collect();
            f_j.embed(loc_j.arity(), &positions)
        };
        let hook = InverseHook {
            var_index: loc_j.arity() - 1,
            of: &f_j_embedded,
        };

        let mut var_images: Vec<Option<Poly>> = vec![None; a_i.arity()];
        let mut inverse_image: Option<Poly> = None;
        for (key, value) in &glue.entries {
            let image = self.parse_span(*value, loc_j.vars(), Some(&hook))?;
            match key {
                MapKey::Var(v) => {
                    let idx = a_i.var_index(v).ok_or_else(|| {
                        self.fail(line, format!("`{v}` is not a variable of patch {}", glue.i))
                    })?;
                    if var_images[idx].replace(image).is_some() {
                        return Err(
                            self.fail(line, format!("duplicate image for variable `{v}`"))
                        );
                    }
                }
                MapKey::Inv(span) => {
                    let arg = self.parse_span(*span, a_i.vars(), None)?;
                    if arg != f_i {
                        return Err(self.fail(
                            line,
                            "the argument of `#inv` must be the glueing element".to_string(),
                        ));
                    }
                    if inverse_image.replace(image).is_some() {
                        return Err(
                            self.fail(line, "duplicate image for the inverse variable".to_string())
                        );
                    }
                }
            }
        }
        let var_images = var_images
            .into_iter()
            .enumerate()
            .map(|(idx, img)| {
                img.ok_or_else(|| {
                    self.fail(
                        line,
                        format!(
                            "glue map gives no image for variable `{}`",
                            a_i.vars()[idx]
                        ),
                    )
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        scheme
            .glue_symmetric(glue.i, glue.j, f_i, f_j, var_images, inverse_image)
            .map_err(|e| self.fail(line, e.to_string()))
    }

    fn build_morphism(
        &self,
        source: &str,
        target: &str,
        decls: &[crate::script::PatchMapDecl],
        line: usize,
    ) -> Result<SchemeMorphism, ExecError> {
        let x = Arc::clone(self.scheme(source));
        let y = Arc::clone(self.scheme(target));
        let mut patch_maps: Vec<Option<PatchMap>> = (0..x.patches().len()).map(|_| None).collect();
        for decl in decls {
            if decl.source_patch >= x.patches().len() {
                return Err(self.fail(
                    decl.line,
                    format!("source patch index {} out of range", decl.source_patch),
                ));
            }
            if decl.target_patch >= y.patches().len() {
                return Err(self.fail(
                    decl.line,
                    format!("target patch index {} out of range", decl.target_patch),
                ));
            }
            let source_alg = &x.patches()[decl.source_patch];
            let target_alg = &y.patches()[decl.target_patch];
            let mut images: Vec<Option<Poly>> = vec![None; target_alg.arity()];
            for (var, span) in &decl.entries {
                let idx = target_alg.var_index(var).ok_or_else(|| {
                    self.fail(
                        decl.line,
                        format!(
                            "`{var}` is not a variable of target patch {}",
                            decl.target_patch
                        ),
                    )
                })?;
                let image = self.parse_span(*span, source_alg.vars(), None)?;
                if images[idx].replace(image).is_some() {
                    return Err(
                        self.fail(decl.line, format!("duplicate image for variable `{var}`"))
                    );
                }
            }
            let images = images
                .into_iter()
                .enumerate()
                .map(|(idx, img)| {
                    img.ok_or_else(|| {
                        self.fail(
                            decl.line,
                            format!(
                                "no image for target variable `{}`",
                                target_alg.vars()[idx]
                            ),
                        )
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            let map = RingMap::new(target_alg, source_alg, images)
                .map_err(|e| self.fail(decl.line, e.to_string()))?;
            if patch_maps[decl.source_patch]
                .replace(PatchMap {
                    target_patch: decl.target_patch,
                    map,
                })
                .is_some()
            {
                return Err(self.fail(
                    decl.line,
                    format!("duplicate assignment for source patch {}", decl.source_patch),
                ));
            }
        }
        let patch_maps = patch_maps
            .into_iter()
            .enumerate()
            .map(|(idx, pm)| {
                pm.ok_or_else(|| {
                    self.fail(line, format!("no assignment for source patch {idx}"))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        SchemeMorphism::new(x, y, patch_maps).map_err(|e| self.fail(line, e.to_string()))
    }

    fn eval(&self, expr: &Expr, line: usize) -> Result<Value, ExecError> {
        let lib = |e: subschemes::Error| ExecError {
            line,
            col: 1,
            message: e.to_string(),
        };
        Ok(match expr {
            Expr::Name(name) => self.named_value(name),
            Expr::Whole(x) => Value::Subscheme(ClosedSubscheme::whole(self.scheme(x))),
            Expr::Empty(x) => Value::Subscheme(ClosedSubscheme::empty(self.scheme(x))),
            Expr::Canon(inner) => match self.eval(inner, line)? {
                Value::Subscheme(z) => Value::Subscheme(z.canon()),
                Value::Ideal(i) => Value::Ideal(i),
                v => return Err(self.type_error(line, "canon", &v)),
            },
            Expr::Mul(a, b) => match (self.eval(a, line)?, self.eval(b, line)?) {
                (Value::Subscheme(x), Value::Subscheme(y)) => {
                    Value::Subscheme(x.mul(&y).map_err(lib)?)
                }
                (Value::Ideal(x), Value::Ideal(y)) => Value::Ideal(x.sum(&y).map_err(lib)?),
                (x, y) => return Err(self.binary_type_error(line, "mul", &x, &y)),
            },
            Expr::Add(a, b) => match (self.eval(a, line)?, self.eval(b, line)?) {
                (Value::Subscheme(x), Value::Subscheme(y)) => {
                    Value::Subscheme(x.add(&y).map_err(lib)?)
                }
                (Value::Ideal(x), Value::Ideal(y)) => {
                    Value::Ideal(x.intersect(&y).map_err(lib)?)
                }
                (x, y) => return Err(self.binary_type_error(line, "add", &x, &y)),
            },
            Expr::Eq(a, b) => match (self.eval(a, line)?, self.eval(b, line)?) {
                (Value::Subscheme(x), Value::Subscheme(y)) => {
                    Value::Bool(x.eq_subscheme(&y).map_err(lib)?)
                }
                (Value::Ideal(x), Value::Ideal(y)) => Value::Bool(x.eq_ideal(&y).map_err(lib)?),
                (x, y) => return Err(self.binary_type_error(line, "eq", &x, &y)),
            },
            Expr::Pullback(f, z) => {
                let morphism = self.morphism(f).clone();
                match self.eval(z, line)? {
                    Value::Subscheme(z) => {
                        Value::Subscheme(ClosedSubscheme::pullback(&morphism, &z).map_err(lib)?)
                    }
                    v => return Err(self.type_error(line, "pullback", &v)),
                }
            }
        })
    }

    fn type_error(&self, line: usize, op: &str, v: &Value) -> ExecError {
        self.fail(line, format!("`{op}` cannot take a {} operand here", v.kind()))
    }

    fn binary_type_error(&self, line: usize, op: &str, a: &Value, b: &Value) -> ExecError {
        self.fail(
            line,
            format!(
                "`{op}` needs two subschemes or two ideals, got a {} and a {}",
                a.kind(),
                b.kind()
            ),
        )
    }
}
