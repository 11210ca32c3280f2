#include "symcanon/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace symcanon {

namespace {

std::string coord(const char* name, std::size_t i, std::size_t j) {
    return std::string(name) + " row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw ContractError(where + ": expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw ContractError(where + ": missing \"" + key + "\"");
    return *it;
}

std::string scalar_string(const FieldSpec& F, const mpq_class& x) { return F.printable(x).get_str(); }

mpq_class scalar_from(const Json& j, const FieldSpec& F, const std::string& where) {
    try {
        if (j.is_number_integer()) return F.reduce(mpq_class(std::to_string(j.get<long long>())));
        if (j.is_string()) {
            mpq_class v(j.get<std::string>());
            v.canonicalize();
            if (v.get_den() == 0) throw ContractError(where + ": zero denominator");
            if (F.is_prime_field() && v.get_den() % F.characteristic() == 0)
                throw ContractError(where + ": denominator not invertible in " + F.to_string());
            return F.reduce(v);
        }
    } catch (const std::invalid_argument&) {
    }
    throw ContractError(where + ": expected an integer or a rational string");
}

Polynomial poly_from(const Json& j, const RingPtr& R, const std::string& where) {
    if (!j.is_string()) throw ContractError(where + ": expected a polynomial string");
    try {
        return parse_poly(j.get<std::string>(), R);
    } catch (const ContractError& e) {
        throw ContractError(where + ": " + e.what());
    }
}

PolyMatrix poly_matrix_from(const Json& j, const RingPtr& R, const char* name) {
    if (!j.is_array()) throw ContractError(std::string(name) + ": expected an array of rows");
    PolyMatrix out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array()) throw ContractError(std::string(name) + " row " + std::to_string(i + 1) + ": expected an array");
        std::vector<Polynomial> row;
        for (std::size_t c = 0; c < j[i].size(); ++c) row.push_back(poly_from(j[i][c], R, coord(name, i, c)));
        out.push_back(std::move(row));
    }
    return out;
}

Json poly_matrix_to_json(const PolyMatrix& m) {
    Json out = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& p : row) r.push_back(p.to_string());
        out.push_back(r);
    }
    return out;
}

Json polys_to_json(const std::vector<Polynomial>& v) {
    Json out = Json::array();
    for (const auto& p : v) out.push_back(p.to_string());
    return out;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t pos = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::ostringstream os;
        os << source << ": JSON parse error at line " << line << ", column " << col << " (byte " << e.byte << ")";
        throw ContractError(os.str());
    }
}

std::string read_text(const std::string& path) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ContractError("cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ContractError("cannot write " + path);
    out << text;
}

Json ring_to_json(const RingPtr& ring) {
    return Json{{"field", ring->field().to_string()}, {"variables", ring->variables()}};
}

RingPtr ring_from_json(const Json& j) {
    const Json& f = member(j, "field", "ring");
    if (!f.is_string()) throw ContractError("ring: \"field\" must be a string");
    FieldSpec F = FieldSpec::parse(f.get<std::string>());
    auto it = j.find("variables");
    if (it == j.end()) return PolyRing::standard(F, 5);
    if (!it->is_array() || it->empty()) throw ContractError("ring: \"variables\" must be a nonempty array");
    std::vector<std::string> vars;
    for (const auto& v : *it) {
        if (!v.is_string()) throw ContractError("ring: variable names must be strings");
        vars.push_back(v.get<std::string>());
    }
    return PolyRing::make(vars, F);
}

Json tableau_to_json(const SymmetricTableau& T) {
    Json j{{"ring", ring_to_json(T.ring())}, {"n", T.n()}, {"alpha", poly_matrix_to_json(T.alpha())},
           {"beta", poly_matrix_to_json(T.beta())}};
    if (T.relaxed()) j["relaxed"] = true;
    return j;
}

SymmetricTableau tableau_from_json(const Json& j) {
    RingPtr R = ring_from_json(member(j, "ring", "tableau"));
    const Json& nj = member(j, "n", "tableau");
    if (!nj.is_number_integer() || nj.get<long long>() < 0) throw ContractError("tableau: \"n\" must be a nonnegative integer");
    auto n = static_cast<std::size_t>(nj.get<long long>());
    PolyMatrix alpha = poly_matrix_from(member(j, "alpha", "tableau"), R, "alpha");
    PolyMatrix beta = poly_matrix_from(member(j, "beta", "tableau"), R, "beta");
    const char* names[2] = {"alpha", "beta"};
    const PolyMatrix* mats[2] = {&alpha, &beta};
    for (int k = 0; k < 2; ++k) {
        if (mats[k]->size() != n + 1)
            throw ContractError(std::string(names[k]) + ": expected " + std::to_string(n + 1) + " rows, found " +
                                std::to_string(mats[k]->size()));
        for (std::size_t i = 0; i < n + 1; ++i)
            if ((*mats[k])[i].size() != n + 1)
                throw ContractError(std::string(names[k]) + " row " + std::to_string(i + 1) + ": expected " +
                                    std::to_string(n + 1) + " entries, found " + std::to_string((*mats[k])[i].size()));
    }
    bool relaxed = j.contains("relaxed") && j["relaxed"].is_boolean() && j["relaxed"].get<bool>();
    if (!relaxed) {
        // First row cubic (or zero), remaining rows linear (or zero).
        for (int k = 0; k < 2; ++k)
            for (std::size_t i = 0; i < n + 1; ++i)
                for (std::size_t c = 0; c < n + 1; ++c) {
                    const Polynomial& p = (*mats[k])[i][c];
                    if (p.is_zero()) continue;
                    int want = i == 0 ? 3 : 1;
                    if (!p.is_homogeneous() || p.degree() != want)
                        throw ContractError(coord(names[k], i, c) + ": expected a form of degree " + std::to_string(want) +
                                            ", found " + p.to_string());
                }
    }
    return SymmetricTableau(R, std::move(alpha), std::move(beta), relaxed);
}

Json ideal_to_json(const Ideal& I, bool reduced_basis) {
    return Json{{"ring", ring_to_json(I.ring())},
                {"generators", polys_to_json(reduced_basis ? I.basis() : I.generators())}};
}

Ideal ideal_from_json(const Json& j) {
    RingPtr R = ring_from_json(member(j, "ring", "ideal"));
    const Json& g = member(j, "generators", "ideal");
    if (!g.is_array()) throw ContractError("ideal: \"generators\" must be an array");
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < g.size(); ++i) gens.push_back(poly_from(g[i], R, "generator " + std::to_string(i + 1)));
    return Ideal(R, gens);
}

Json matrix_to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) r.push_back(scalar_string(m.field(), m.at(i, c)));
        out.push_back(r);
    }
    return out;
}

Matrix matrix_from_json(const Json& j, const FieldSpec& field) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) throw ContractError("matrix: expected a nonempty array of rows");
    Matrix m(field, j.size(), j[0].size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != m.cols()) throw ContractError("matrix row " + std::to_string(i + 1) + ": wrong length");
        for (std::size_t c = 0; c < m.cols(); ++c) m.set(i, c, scalar_from(j[i][c], field, coord("matrix", i, c)));
    }
    return m;
}

Json move_to_json(const OpMove& m) {
    Json j{{"kind", m.kind_name()}};
    switch (m.kind) {
        case OpMove::Kind::rows: j["g"] = matrix_to_json(*m.g); break;
        case OpMove::Kind::add_col_same:
            j["lambda"] = m.lambda.get_str();
            j["mu"] = m.mu;
            j["swapped"] = m.swapped;
            break;
        case OpMove::Kind::add_col_pair:
            j["lambda"] = m.lambda.get_str();
            j["mu"] = m.mu;
            j["nu"] = m.nu;
            j["swapped"] = m.swapped;
            break;
        case OpMove::Kind::transfer:
            j["lambda"] = m.lambda.get_str();
            j["mu"] = m.mu;
            j["nu"] = m.nu;
            break;
        case OpMove::Kind::swap:
            j["mu"] = m.mu;
            j["nu"] = m.nu;
            break;
        case OpMove::Kind::rotate: j["mu"] = m.mu; break;
    }
    return j;
}

OpMove move_from_json(const Json& j, const FieldSpec& field) {
    const Json& k = member(j, "kind", "move");
    if (!k.is_string()) throw ContractError("move: \"kind\" must be a string");
    std::string kind = k.get<std::string>();
    auto idx = [&](const char* key) {
        const Json& v = member(j, key, "move " + kind);
        if (!v.is_number_integer()) throw ContractError("move " + kind + ": \"" + key + "\" must be an integer");
        return static_cast<int>(v.get<long long>());
    };
    auto lam = [&]() { return scalar_from(member(j, "lambda", "move " + kind), field, "move " + kind + " lambda"); };
    bool sw = j.contains("swapped") && j["swapped"].is_boolean() && j["swapped"].get<bool>();
    if (kind == "rows") return OpMove::rows(matrix_from_json(member(j, "g", "move rows"), field));
    if (kind == "add_col_same") return OpMove::add_col_same(lam(), idx("mu"), sw);
    if (kind == "add_col_pair") return OpMove::add_col_pair(lam(), idx("mu"), idx("nu"), sw);
    if (kind == "transfer") return OpMove::transfer(lam(), idx("mu"), idx("nu"));
    if (kind == "swap") return OpMove::swap(idx("mu"), idx("nu"));
    if (kind == "rotate") return OpMove::rotate(idx("mu"));
    throw ContractError("move: unknown kind \"" + kind + "\"");
}

Json moves_to_json(const std::vector<OpMove>& moves) {
    Json out = Json::array();
    for (const auto& m : moves) out.push_back(move_to_json(m));
    return out;
}

std::vector<OpMove> moves_from_json(const Json& j, const FieldSpec& field) {
    if (!j.is_array()) throw ContractError("moves: expected an array");
    std::vector<OpMove> out;
    for (const auto& m : j) out.push_back(move_from_json(m, field));
    return out;
}

Json params_to_json(const ParameterPoint& p) {
    Json lin = Json::object(), quad = Json::object(), sc = Json::object();
    for (std::size_t i = 0; i < p.linear.size(); ++i) lin[ParameterPoint::linear_names()[i]] = p.linear[i].to_string();
    for (std::size_t i = 0; i < p.quadric.size(); ++i) quad[ParameterPoint::quadric_names()[i]] = p.quadric[i].to_string();
    for (std::size_t i = 0; i < p.scalar.size(); ++i)
        sc[ParameterPoint::scalar_names()[i]] = scalar_string(p.ring->field(), p.scalar[i]);
    return Json{{"ring", ring_to_json(p.ring)}, {"linear", lin}, {"quadric", quad}, {"scalar", sc}};
}

ParameterPoint params_from_json(const Json& j) {
    ParameterPoint p;
    p.ring = ring_from_json(member(j, "ring", "parameters"));
    const Json& lin = member(j, "linear", "parameters");
    const Json& quad = member(j, "quadric", "parameters");
    const Json& sc = member(j, "scalar", "parameters");
    for (const char* name : ParameterPoint::linear_names())
        p.linear.push_back(poly_from(member(lin, name, "parameters.linear"), p.ring, std::string("linear ") + name));
    for (const char* name : ParameterPoint::quadric_names())
        p.quadric.push_back(poly_from(member(quad, name, "parameters.quadric"), p.ring, std::string("quadric ") + name));
    for (const char* name : ParameterPoint::scalar_names())
        p.scalar.push_back(scalar_from(member(sc, name, "parameters.scalar"), p.ring->field(), std::string("scalar ") + name));
    return p;
}

Json cert_to_json(const BaseChangeCert& c) {
    return Json{{"moves", moves_to_json(c.moves)},
                {"det_alpha", c.det_alpha.to_string()},
                {"det_beta", c.det_beta.to_string()},
                {"witnesses",
                 {{"det_alpha_nonzero", c.witnesses.det_alpha_nonzero},
                  {"quotient_equal", c.witnesses.quotient_equal}}},
                {"trials", {{"phase1", c.phase1_trials}, {"phase2", c.phase2_trials}}},
                {"output", tableau_to_json(c.output)}};
}

Json ledger_to_json(const DimensionLedger& l) {
    return Json{{"dim_P", l.dim_P},       {"ker_d1_4", l.ker_d1},         {"ker_d1_prime_4", l.ker_d1_prime},
                {"ker_D1_3", l.ker_D1},   {"ker_D1_prime_3", l.ker_D1_prime}, {"dim_G", l.dim_G},
                {"dim_H", l.dim_H},       {"dim_L", l.dim_L},             {"result", l.result}};
}

Json invariants_to_json(const SurfaceInvariants& s) {
    return Json{{"n", s.n}, {"p_g", s.p_g}, {"q", s.q}, {"K2", s.K2}, {"chi", s.chi}, {"delta", s.delta}};
}

Json jacobian_to_json(const JacobianCheck& c) {
    return Json{{"ok", c.ok},
                {"quadrics", c.quadrics},
                {"jacobian_rank", c.jacobian_rank},
                {"dim_Ms_formula", c.dim_Ms_formula},
                {"dim_Ms_tangent", c.dim_Ms_tangent},
                {"codim_delta", c.codim_delta},
                {"resamples", c.resamples}};
}

Json reflexivity_to_json(const ReflexivityReport& r) {
    Json deg = Json::array();
    for (const auto& d : r.degrees)
        deg.push_back({{"degree", d.degree}, {"kernel_dim", d.kernel_dim}, {"image_dim", d.image_dim}, {"exact", d.exact}});
    return Json{{"ok", r.ok}, {"composite_zero", r.composite_zero}, {"degrees", deg}};
}

Json table_to_json(const MultiplicationTable& t) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < t.entries.size(); ++i)
        for (std::size_t j = i; j < t.entries[i].size(); ++j)
            entries.push_back(
                {{"i", i}, {"j", j}, {"c0", t.entries[i][j].c0.to_string()}, {"c", polys_to_json(t.entries[i][j].c)}});
    return Json{{"ring", ring_to_json(t.ring)},
                {"n", t.n},
                {"columns", t.columns},
                {"D", t.D.to_string()},
                {"N", polys_to_json(t.N)},
                {"surface_saturated", t.surface_saturated},
                {"products", entries}};
}

CheckStatus status_from_string(const std::string& s) {
    if (s == "pass") return CheckStatus::pass;
    if (s == "fail") return CheckStatus::fail;
    if (s == "skipped") return CheckStatus::skipped;
    if (s == "assumed") return CheckStatus::assumed;
    throw ContractError("unknown check status \"" + s + "\"");
}

Json report_to_json(const VerificationReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    return Json{{"n", r.n}, {"overall", r.overall ? "pass" : "fail"}, {"assumed", r.assumed_count()}, {"checks", checks}};
}

VerificationReport report_from_json(const Json& j) {
    VerificationReport r;
    const Json& n = member(j, "n", "report");
    if (!n.is_number_integer()) throw ContractError("report: \"n\" must be an integer");
    r.n = static_cast<int>(n.get<long long>());
    const Json& o = member(j, "overall", "report");
    if (!o.is_string() || (o != "pass" && o != "fail")) throw ContractError("report: \"overall\" must be \"pass\" or \"fail\"");
    r.overall = o == "pass";
    const Json& cs = member(j, "checks", "report");
    if (!cs.is_array()) throw ContractError("report: \"checks\" must be an array");
    for (const auto& c : cs) {
        CheckResult cr;
        cr.name = member(c, "name", "check").get<std::string>();
        cr.status = status_from_string(member(c, "status", "check").get<std::string>());
        cr.detail = c.contains("detail") ? c["detail"].get<std::string>() : "";
        r.checks.push_back(std::move(cr));
    }
    return r;
}

std::string render_report(const VerificationReport& r, ReportFormat format) {
    if (format == ReportFormat::json) return report_to_json(r).dump(2) + "\n";
    std::ostringstream os;
    os << "verification report, n = " << r.n << "\n";
    for (const auto& c : r.checks) {
        std::string st = to_string(c.status);
        std::transform(st.begin(), st.end(), st.begin(), [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
        os << c.name << ": " << st << "\n";
        if (!c.detail.empty()) os << "    " << c.detail << "\n";
    }
    os << "OVERALL: " << (r.overall ? "PASS" : "FAIL");
    if (int a = r.assumed_count(); a > 0) os << " (" << a << " assumed)";
    os << "\n";
    return os.str();
}

}  // namespace symcanon
