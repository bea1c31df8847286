#include "ringcert/certio.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <set>

#include "json.hpp"

namespace ringcert {

using json = nlohmann::json;

namespace {

constexpr int kIndent = 1;

// ---------------------------------------------------------------------------
// Writing

json jint(const BigInt& x) { return to_string(x); }
json jint(unsigned long x) { return std::to_string(x); }
json jrat(const Rat& x) { return to_string(x); }

json jlist(const std::vector<BigInt>& v)
{
    json out = json::array();
    for (const BigInt& x : v)
        out.push_back(jint(x));
    return out;
}

json jpoly(const ZPoly& f) { return jlist(f.coeffs()); }

json jpoly(const FpPoly& f)
{
    json out = json::array();
    for (const Fp& c : f.coeffs())
        out.push_back(jint(c.value()));
    return out;
}

template <class P>
json jpolys(const std::vector<P>& v)
{
    json out = json::array();
    for (const P& f : v)
        out.push_back(jpoly(f));
    return out;
}

json jmatrix(const ZMatrix& m)
{
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.push_back(jlist(m.row(i)));
    return out;
}

json jmatrix(const FpMatrix& m)
{
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(jint(m(i, j).value()));
        out.push_back(std::move(row));
    }
    return out;
}

json jarray3(const Array3& a)
{
    json out = json::array();
    for (const auto& plane : a) {
        json p = json::array();
        for (const auto& row : plane)
            p.push_back(jlist(row));
        out.push_back(std::move(p));
    }
    return out;
}

json juints(const std::vector<unsigned>& v)
{
    json out = json::array();
    for (unsigned x : v)
        out.push_back(jint(x));
    return out;
}

json jproof(const PrimalityProof& p);

json jpratt(const PrattCertificate& c)
{
    json factors = json::array();
    for (const PrattFactor& f : c.factors)
        factors.push_back({{"prime", jproof(f.prime)}, {"exponent", jint(f.exponent)}});
    return {{"witness", jint(c.witness)}, {"factors", factors}};
}

json jproof(const PrimalityProof& p)
{
    json out = {{"p", jint(p.p)}};
    if (p.pratt)
        out["pratt"] = jpratt(*p.pratt);
    return out;
}

json jnumber_factors(const std::vector<NumberFactor>& v)
{
    json out = json::array();
    for (const NumberFactor& f : v)
        out.push_back({{"prime", jproof(f.prime)}, {"exponent", jint(f.exponent)}});
    return out;
}

json jrabin(const RabinCertificate& c)
{
    json g = json::array(), hp = json::array();
    for (const auto& row : c.g)
        g.push_back(jpolys(row));
    for (const auto& row : c.hprime)
        hp.push_back(jpolys(row));
    return {{"p", jproof(c.p)},       {"n", jint(c.n)},       {"t", jint(c.t)},
            {"s", jint(c.s)},         {"f", jpoly(c.f)},      {"h", jpolys(c.h)},
            {"g", g},                 {"hprime", hp},         {"a", jpolys(c.a)},
            {"b", jpolys(c.b)},       {"n_factors", jnumber_factors(c.n_factors)}};
}

json jdegree_analysis(const DegreeAnalysisCertificate& c)
{
    json primes = json::array();
    for (const DegreeAnalysisPrime& dp : c.primes) {
        json factors = json::array();
        for (const ModPFactor& f : dp.factors)
            factors.push_back({{"cert", jrabin(f.cert)}, {"multiplicity", jint(f.multiplicity)}});
        primes.push_back({{"p", jproof(dp.p)}, {"factors", factors}});
    }
    return {{"f", jpoly(c.f)}, {"primes", primes}};
}

json jlpfw(const LPFWCertificate& c)
{
    return {{"f", jpoly(c.f)},
            {"degree_analysis", c.degree_analysis ? jdegree_analysis(*c.degree_analysis) : json(nullptr)},
            {"r", jrat(c.r)},
            {"rho", jrat(c.rho)},
            {"m", jint(c.m)},
            {"s", jint(c.s)},
            {"P", jproof(c.P)}};
}

json jdedekind(const DedekindCertificate& c)
{
    return {{"T", jpoly(c.T)},   {"p", jproof(c.p)},       {"g", jpoly(c.g)},
            {"h", jpoly(c.h)},   {"f", jpoly(c.f)},        {"a", jpoly(c.a)},
            {"b", jpoly(c.b)},   {"c", jpoly(c.c)},        {"quotient", jpoly(c.quotient)},
            {"n_r", jint(c.n_r)}, {"cofactor", jpoly(c.cofactor)}, {"u", jpoly(c.u)},
            {"v", jpoly(c.v)}};
}

json jorder(const OrderDescription& o)
{
    json a = json::array(), s = json::array();
    for (const auto& row : o.a)
        a.push_back(jlist(row));
    for (const ZPoly& p : o.s)
        s.push_back(jpoly(p));
    return {{"T", jpoly(o.T)},         {"d", jint(o.d)},         {"B", jmatrix(o.B)},
            {"a", a},                  {"s", s},                 {"one", jlist(o.one)},
            {"one_s", jpoly(o.one_s)}, {"theta", jlist(o.theta)}, {"theta_s", jpoly(o.theta_s)}};
}

json jkernel(const KernelBasis& kb)
{
    return {{"t", jint(kb.t)},        {"m", jint(kb.m)},         {"n", jint(kb.n)},
            {"V", jmatrix(kb.V)},     {"W", jmatrix(kb.W)},      {"U", jmatrix(kb.U)},
            {"nu", juints(kb.nu)},    {"omega", juints(kb.omega)}};
}

json jblocks(const std::vector<BlockIndex>& v)
{
    json out = json::array();
    for (const BlockIndex& b : v)
        out.push_back({{"block", b.in_b ? "B" : "A"}, {"index", jint(b.index)}});
    return out;
}

json jshort(const PMaxShortCertificate& c)
{
    return {{"p", jproof(c.p)},         {"kernel", jkernel(c.kb)}, {"X", jmatrix(c.X)},
            {"beta", jlist(c.beta)},    {"gamma", jlist(c.gamma)}, {"a", jmatrix(c.a)},
            {"c", jmatrix(c.c)},        {"eta", jblocks(c.eta)}};
}

json jlong(const PMaxLongCertificate& c)
{
    return {{"p", jproof(c.p)},     {"kernel", jkernel(c.kb)}, {"X", jmatrix(c.X)},
            {"a", jarray3(c.a)},    {"c", jarray3(c.c)},       {"d", jarray3(c.d)},
            {"e", jarray3(c.e)},    {"eta", jblocks(c.eta)},   {"eta2", jblocks(c.eta2)}};
}

json jirred(const IntIrredCertificate& c)
{
    if (auto* da = std::get_if<DegreeAnalysisCertificate>(&c))
        return {{"type", "degree_analysis"}, {"certificate", jdegree_analysis(*da)}};
    return {{"type", "lpfw"}, {"certificate", jlpfw(std::get<LPFWCertificate>(c))}};
}

json jentry(const MaximalityEntry& e)
{
    if (auto* d = std::get_if<DedekindCertificate>(&e))
        return {{"type", "dedekind"}, {"certificate", jdedekind(*d)}};
    if (auto* s = std::get_if<PMaxShortCertificate>(&e))
        return {{"type", "pmax_short"}, {"certificate", jshort(*s)}};
    return {{"type", "pmax_long"}, {"certificate", jlong(std::get<PMaxLongCertificate>(e))}};
}

json jbundle(const CertificateBundle& b)
{
    json entries = json::array();
    for (const MaximalityEntry& e : b.entries)
        entries.push_back(jentry(e));
    const SeparabilityWitness& w = b.separability;
    json out = {{"T", jpoly(b.T)},
                {"irreducibility", jirred(b.irreducibility)},
                {"order", jorder(b.order)},
                {"separability",
                 {{"a", jpoly(w.a)},
                  {"b", jpoly(w.b)},
                  {"n", jint(w.n)},
                  {"sign", std::to_string(w.sign)},
                  {"factors", jnumber_factors(w.factors)}}},
                {"entries", entries}};
    out["claimed_discriminant"] = b.claimed_discriminant ? jint(*b.claimed_discriminant) : json(nullptr);
    return out;
}

json payload_of(const CertificateFile& f)
{
    struct V {
        json operator()(const ZPoly& p) const { return {{"coefficients", jpoly(p)}}; }
        json operator()(const BasisInput& b) const { return {{"d", jint(b.d)}, {"matrix", jmatrix(b.matrix)}}; }
        json operator()(const PrimalityProof& p) const { return jproof(p); }
        json operator()(const RabinCertificate& c) const { return jrabin(c); }
        json operator()(const DegreeAnalysisCertificate& c) const { return jdegree_analysis(c); }
        json operator()(const LPFWCertificate& c) const { return jlpfw(c); }
        json operator()(const DedekindCertificate& c) const { return jdedekind(c); }
        json operator()(const PMaxShortFile& c) const { return {{"order", jorder(c.order)}, {"certificate", jshort(c.cert)}}; }
        json operator()(const PMaxLongFile& c) const { return {{"order", jorder(c.order)}, {"certificate", jlong(c.cert)}}; }
        json operator()(const CertificateBundle& b) const { return jbundle(b); }
    };
    return std::visit(V{}, f);
}

std::string seal(const std::string& kind, const json& payload)
{
    json env = {{"schema_version", std::string(kSchemaVersion)},
                {"kind", kind},
                {"payload", payload},
                {"integrity", "sha256:" + sha256_hex(payload.dump())}};
    return env.dump(kIndent) + "\n";
}

// ---------------------------------------------------------------------------
// Reading

[[noreturn]] void fail(const std::string& ptr, const std::string& msg)
{
    throw ParseError(msg + " (at " + (ptr.empty() ? "/" : ptr) + ")", std::nullopt, ptr);
}

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

void expect_object(const json& j, const std::string& ptr, std::initializer_list<const char*> keys)
{
    if (!j.is_object())
        fail(ptr, "expected an object");
    std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& item : j.items())
        if (!allowed.count(item.key()))
            fail(child(ptr, item.key()), "unknown field");
    for (const char* k : keys)
        if (!j.contains(k))
            fail(child(ptr, k), "missing field");
}

const json& expect_array(const json& j, const std::string& ptr)
{
    if (!j.is_array())
        fail(ptr, "expected an array");
    return j;
}

BigInt get_int(const json& j, const std::string& ptr)
{
    if (!j.is_string())
        fail(ptr, "integers must be decimal strings");
    try {
        return parse_bigint(j.get_ref<const std::string&>());
    } catch (const std::invalid_argument& e) {
        fail(ptr, e.what());
    }
}

unsigned get_uint(const json& j, const std::string& ptr)
{
    BigInt v = get_int(j, ptr);
    if (v < 0 || v > 0xffffffffUL)
        fail(ptr, "count out of range");
    return static_cast<unsigned>(v.get_ui());
}

Rat get_rat(const json& j, const std::string& ptr)
{
    if (!j.is_string())
        fail(ptr, "rationals must be strings");
    const std::string& s = j.get_ref<const std::string&>();
    Rat r;
    try {
        r = parse_rat(s);
    } catch (const std::exception& e) {
        fail(ptr, e.what());
    }
    if (to_string(r) != s)
        fail(ptr, "rational not in lowest terms");
    return r;
}

std::vector<BigInt> get_list(const json& j, const std::string& ptr)
{
    std::vector<BigInt> out;
    const json& a = expect_array(j, ptr);
    for (std::size_t i = 0; i < a.size(); ++i)
        out.push_back(get_int(a[i], child(ptr, i)));
    return out;
}

std::vector<unsigned> get_uints(const json& j, const std::string& ptr)
{
    std::vector<unsigned> out;
    const json& a = expect_array(j, ptr);
    for (std::size_t i = 0; i < a.size(); ++i)
        out.push_back(get_uint(a[i], child(ptr, i)));
    return out;
}

ZPoly get_zpoly(const json& j, const std::string& ptr)
{
    std::vector<BigInt> c = get_list(j, ptr);
    if (!c.empty() && c.back() == 0)
        fail(ptr, "polynomial has a zero leading coefficient");
    return ZPoly(std::move(c));
}

Modulus get_modulus(const BigInt& p, const std::string& ptr)
{
    if (p < 2)
        fail(ptr, "field characteristic must be at least 2");
    return Modulus::of(p);
}

Fp get_fp(const json& j, Modulus p, const std::string& ptr)
{
    BigInt v = get_int(j, ptr);
    if (v < 0 || v >= p.value())
        fail(ptr, "residue out of range");
    return Fp(v, p);
}

FpPoly get_fppoly(const json& j, Modulus p, const std::string& ptr)
{
    const json& a = expect_array(j, ptr);
    std::vector<Fp> c;
    for (std::size_t i = 0; i < a.size(); ++i)
        c.push_back(get_fp(a[i], p, child(ptr, i)));
    if (!c.empty() && c.back().is_zero())
        fail(ptr, "polynomial has a zero leading coefficient");
    return FpPoly(std::move(c));
}

std::vector<FpPoly> get_fppolys(const json& j, Modulus p, const std::string& ptr)
{
    std::vector<FpPoly> out;
    const json& a = expect_array(j, ptr);
    for (std::size_t i = 0; i < a.size(); ++i)
        out.push_back(get_fppoly(a[i], p, child(ptr, i)));
    return out;
}

ZMatrix get_zmatrix(const json& j, const std::string& ptr)
{
    const json& a = expect_array(j, ptr);
    std::vector<std::vector<BigInt>> rows;
    for (std::size_t i = 0; i < a.size(); ++i) {
        rows.push_back(get_list(a[i], child(ptr, i)));
        if (rows.back().size() != rows.front().size())
            fail(child(ptr, i), "ragged matrix");
    }
    return ZMatrix::from_rows(rows);
}

FpMatrix get_fpmatrix(const json& j, Modulus p, const std::string& ptr)
{
    ZMatrix z = get_zmatrix(j, ptr);
    FpMatrix out(z.rows(), z.cols(), Fp(0L, p));
    for (std::size_t i = 0; i < z.rows(); ++i)
        for (std::size_t k = 0; k < z.cols(); ++k) {
            if (z(i, k) < 0 || z(i, k) >= p.value())
                fail(child(child(ptr, i), k), "residue out of range");
            out(i, k) = Fp(z(i, k), p);
        }
    return out;
}

Array3 get_array3(const json& j, const std::string& ptr)
{
    Array3 out;
    const json& a = expect_array(j, ptr);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string pi = child(ptr, i);
        const json& plane = expect_array(a[i], pi);
        std::vector<std::vector<BigInt>> rows;
        for (std::size_t k = 0; k < plane.size(); ++k)
            rows.push_back(get_list(plane[k], child(pi, k)));
        out.push_back(std::move(rows));
    }
    return out;
}

PrimalityProof get_proof(const json& j, const std::string& ptr);

PrattCertificate get_pratt(const json& j, const BigInt& p, const std::string& ptr)
{
    expect_object(j, ptr, {"witness", "factors"});
    PrattCertificate c;
    c.p = p;
    c.witness = get_int(j["witness"], child(ptr, "witness"));
    const std::string fp = child(ptr, "factors");
    const json& a = expect_array(j["factors"], fp);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string pi = child(fp, i);
        expect_object(a[i], pi, {"prime", "exponent"});
        c.factors.push_back({get_proof(a[i]["prime"], child(pi, "prime")), get_uint(a[i]["exponent"], child(pi, "exponent"))});
    }
    return c;
}

PrimalityProof get_proof(const json& j, const std::string& ptr)
{
    if (!j.is_object())
        fail(ptr, "expected an object");
    if (j.contains("pratt"))
        expect_object(j, ptr, {"p", "pratt"});
    else
        expect_object(j, ptr, {"p"});
    PrimalityProof out;
    out.p = get_int(j["p"], child(ptr, "p"));
    if (j.contains("pratt"))
        out.pratt = std::make_shared<const PrattCertificate>(get_pratt(j["pratt"], out.p, child(ptr, "pratt")));
    return out;
}

std::vector<NumberFactor> get_number_factors(const json& j, const std::string& ptr)
{
    std::vector<NumberFactor> out;
    const json& a = expect_array(j, ptr);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string pi = child(ptr, i);
        expect_object(a[i], pi, {"prime", "exponent"});
        out.push_back({get_proof(a[i]["prime"], child(pi, "prime")), get_uint(a[i]["exponent"], child(pi, "exponent"))});
    }
    return out;
}

RabinCertificate get_rabin(const json& j, const std::string& ptr)
{
    expect_object(j, ptr, {"p", "n", "t", "s", "f", "h", "g", "hprime", "a", "b", "n_factors"});
    RabinCertificate c;
    c.p = get_proof(j["p"], child(ptr, "p"));
    const Modulus p = get_modulus(c.p.p, child(ptr, "p"));
    c.n = get_uint(j["n"], child(ptr, "n"));
    c.t = get_int(j["t"], child(ptr, "t"));
    c.s = get_uint(j["s"], child(ptr, "s"));
    c.f = get_fppoly(j["f"], p, child(ptr, "f"));
    c.h = get_fppolys(j["h"], p, child(ptr, "h"));
    for (const char* key : {"g", "hprime"}) {
        const std::string pk = child(ptr, key);
        const json& a = expect_array(j[key], pk);
        auto& dst = std::string(key) == "g" ? c.g : c.hprime;
        for (std::size_t i = 0; i < a.size(); ++i)
            dst.push_back(get_fppolys(a[i], p, child(pk, i)));
    }
    c.a = get_fppolys(j["a"], p, child(ptr, "a"));
    c.b = get_fppolys(j["b"], p, child(ptr, "b"));
    c.n_factors = get_number_factors(j["n_factors"], child(ptr, "n_factors"));
    return c;
}

DegreeAnalysisCertificate get_degree_analysis(const json& j, const std::string& ptr)
{
    expect_object(j, ptr, {"f", "primes"});
    DegreeAnalysisCertificate c;
    c.f = get_zpoly(j["f"], child(ptr, "f"));
    const std::string pp = child(ptr, "primes");
    const json& a = expect_array(j["primes"], pp);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string pi = child(pp, i);
        expect_object(a[i], pi, {"p", "factors"});
        DegreeAnalysisPrime dp;
        dp.p = get_proof(a[i]["p"], child(pi, "p"));
        const std::string pf = child(pi, "factors");
        const json& fs = expect_array(a[i]["factors"], pf);
        for (std::size_t k = 0; k < fs.size(); ++k) {
            const std::string pk = child(pf, k);
            expect_object(fs[k], pk, {"cert", "multiplicity"});
            dp.factors.push_back({get_rabin(fs[k]["cert"], child(pk, "cert")),
                                  get_uint(fs[k]["multiplicity"], child(pk, "multiplicity"))});
        }
        c.primes.push_back(std::move(dp));
    }
    return c;
}

LPFWCertificate get_lpfw(const json& j, const std::string& ptr)
{
    expect_object(j, ptr, {"f", "degree_analysis", "r", "rho", "m", "s", "P"});
    LPFWCertificate c;
    c.f = get_zpoly(j["f"], child(ptr, "f"));
    if (!j["degree_analysis"].is_null())
        c.degree_analysis = get_degree_analysis(j["degree_analysis"], child(ptr, "degree_analysis"));
    c.r = get_rat(j["r"], child(ptr, "r"));
    c.rho = get_rat(j["rho"], child(ptr, "rho"));
    c.m = get_int(j["m"], child(ptr, "m"));
    c.s = get_int(j["s"], child(ptr, "s"));
    c.P = get_proof(j["P"], child(ptr, "P"));
    return c;
}

DedekindCertificate get_dedekind(const json& j, const std::string& ptr)
{
    expect_object(j, ptr, {"T", "p", "g", "h", "f", "a", "b", "c", "quotient", "n_r", "cofactor", "u", "v"});
    DedekindCertificate c;
    c.T = get_zpoly(j["T"], child(ptr, "T"));
    c.p = get_proof(j["p"], child(ptr, "p"));
    const Modulus p = get_modulus(c.p.p, child(ptr, "p"));
    c.g = get_zpoly(j["g"], child(ptr, "g"));
    c.h = get_zpoly(j["h"], child(ptr, "h"));
    c.f = get_zpoly(j["f"], child(ptr, "f"));
    c.a = get_fppoly(j["a"], p, child(ptr, "a"));
    c.b = get_fppoly(j["b"], p, child(ptr, "b"));
    c.c = get_fppoly(j["c"], p, child(ptr, "c"));
    c.quotient = get_fppoly(j["quotient"], p, child(ptr, "quotient"));
    c.n_r = get_uint(j["n_r"], child(ptr, "n_r"));
    c.cofactor = get_fppoly(j["cofactor"], p, child(ptr, "cofactor"));
    c.u = get_fppoly(j["u"], p, child(ptr, "u"));
    c.v = get_fppoly(j["v"], p, child(ptr, "v"));
    return c;
}

OrderDescription get_order(const json& j, const std::string& ptr)
{
    expect_object(j, ptr, {"T", "d", "B", "a", "s", "one", "one_s", "theta", "theta_s"});
    OrderDescription o;
    o.T = get_zpoly(j["T"], child(ptr, "T"));
    o.d = get_int(j["d"], child(ptr, "d"));
    o.B = get_zmatrix(j["B"], child(ptr, "B"));
    const std::string pa = child(ptr, "a"), ps = child(ptr, "s");
    const json& a = expect_array(j["a"], pa);
    for (std::size_t i = 0; i < a.size(); ++i)
        o.a.push_back(get_list(a[i], child(pa, i)));
    const json& s = expect_array(j["s"], ps);
    for (std::size_t i = 0; i < s.size(); ++i)
        o.s.push_back(get_zpoly(s[i], child(ps, i)));
    o.one = get_list(j["one"], child(ptr, "one"));
    o.one_s = get_zpoly(j["one_s"], child(ptr, "one_s"));
    o.theta = get_list(j["theta"], child(ptr, "theta"));
    o.theta_s = get_zpoly(j["theta_s"], child(ptr, "theta_s"));
    return o;
}

KernelBasis get_kernel(const json& j, Modulus p, const std::string& ptr)
{
    expect_object(j, ptr, {"t", "m", "n", "V", "W", "U", "nu", "omega"});
    KernelBasis kb;
    kb.t = get_uint(j["t"], child(ptr, "t"));
    kb.m = get_uint(j["m"], child(ptr, "m"));
    kb.n = get_uint(j["n"], child(ptr, "n"));
    kb.V = get_zmatrix(j["V"], child(ptr, "V"));
    kb.W = get_zmatrix(j["W"], child(ptr, "W"));
    kb.U = get_fpmatrix(j["U"], p, child(ptr, "U"));
    kb.nu = get_uints(j["nu"], child(ptr, "nu"));
    kb.omega = get_uints(j["omega"], child(ptr, "omega"));
    return kb;
}

std::vector<BlockIndex> get_blocks(const json& j, const std::string& ptr)
{
    std::vector<BlockIndex> out;
    const json& a = expect_array(j, ptr);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string pi = child(ptr, i);
        expect_object(a[i], pi, {"block", "index"});
        const json& b = a[i]["block"];
        if (b != "A" && b != "B")
            fail(child(pi, "block"), "block must be \"A\" or \"B\"");
        out.push_back({b == "B", get_uint(a[i]["index"], child(pi, "index"))});
    }
    return out;
}

PMaxShortCertificate get_short(const json& j, const std::string& ptr)
{
    expect_object(j, ptr, {"p", "kernel", "X", "beta", "gamma", "a", "c", "eta"});
    PMaxShortCertificate c;
    c.p = get_proof(j["p"], child(ptr, "p"));
    const Modulus p = get_modulus(c.p.p, child(ptr, "p"));
    c.kb = get_kernel(j["kernel"], p, child(ptr, "kernel"));
    c.X = get_zmatrix(j["X"], child(ptr, "X"));
    c.beta = get_list(j["beta"], child(ptr, "beta"));
    c.gamma = get_list(j["gamma"], child(ptr, "gamma"));
    c.a = get_zmatrix(j["a"], child(ptr, "a"));
    c.c = get_zmatrix(j["c"], child(ptr, "c"));
    c.eta = get_blocks(j["eta"], child(ptr, "eta"));
    return c;
}

PMaxLongCertificate get_long(const json& j, const std::string& ptr)
{
    expect_object(j, ptr, {"p", "kernel", "X", "a", "c", "d", "e", "eta", "eta2"});
    PMaxLongCertificate c;
    c.p = get_proof(j["p"], child(ptr, "p"));
    const Modulus p = get_modulus(c.p.p, child(ptr, "p"));
    c.kb = get_kernel(j["kernel"], p, child(ptr, "kernel"));
    c.X = get_zmatrix(j["X"], child(ptr, "X"));
    c.a = get_array3(j["a"], child(ptr, "a"));
    c.c = get_array3(j["c"], child(ptr, "c"));
    c.d = get_array3(j["d"], child(ptr, "d"));
    c.e = get_array3(j["e"], child(ptr, "e"));
    c.eta = get_blocks(j["eta"], child(ptr, "eta"));
    c.eta2 = get_blocks(j["eta2"], child(ptr, "eta2"));
    return c;
}

const std::string& get_tag(const json& j, const std::string& ptr)
{
    if (!j.is_string())
        fail(ptr, "expected a type tag");
    return j.get_ref<const std::string&>();
}

CertificateBundle get_bundle(const json& j, const std::string& ptr)
{
    expect_object(j, ptr, {"T", "irreducibility", "order", "separability", "entries", "claimed_discriminant"});
    CertificateBundle b;
    b.T = get_zpoly(j["T"], child(ptr, "T"));

    const std::string pi = child(ptr, "irreducibility");
    expect_object(j["irreducibility"], pi, {"type", "certificate"});
    const std::string& itype = get_tag(j["irreducibility"]["type"], child(pi, "type"));
    if (itype == "degree_analysis")
        b.irreducibility = get_degree_analysis(j["irreducibility"]["certificate"], child(pi, "certificate"));
    else if (itype == "lpfw")
        b.irreducibility = get_lpfw(j["irreducibility"]["certificate"], child(pi, "certificate"));
    else
        fail(child(pi, "type"), "unknown irreducibility certificate type");

    b.order = get_order(j["order"], child(ptr, "order"));

    const std::string psep = child(ptr, "separability");
    const json& sep = j["separability"];
    expect_object(sep, psep, {"a", "b", "n", "sign", "factors"});
    b.separability.a = get_zpoly(sep["a"], child(psep, "a"));
    b.separability.b = get_zpoly(sep["b"], child(psep, "b"));
    b.separability.n = get_int(sep["n"], child(psep, "n"));
    BigInt sign = get_int(sep["sign"], child(psep, "sign"));
    if (sign != 1 && sign != -1)
        fail(child(psep, "sign"), "sign must be 1 or -1");
    b.separability.sign = sign == 1 ? 1 : -1;
    b.separability.factors = get_number_factors(sep["factors"], child(psep, "factors"));

    const std::string pe = child(ptr, "entries");
    const json& entries = expect_array(j["entries"], pe);
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const std::string pk = child(pe, k);
        expect_object(entries[k], pk, {"type", "certificate"});
        const std::string& type = get_tag(entries[k]["type"], child(pk, "type"));
        const json& body = entries[k]["certificate"];
        if (type == "dedekind")
            b.entries.emplace_back(get_dedekind(body, child(pk, "certificate")));
        else if (type == "pmax_short")
            b.entries.emplace_back(get_short(body, child(pk, "certificate")));
        else if (type == "pmax_long")
            b.entries.emplace_back(get_long(body, child(pk, "certificate")));
        else
            fail(child(pk, "type"), "unknown maximality certificate type");
    }
    if (!j["claimed_discriminant"].is_null())
        b.claimed_discriminant = get_int(j["claimed_discriminant"], child(ptr, "claimed_discriminant"));
    return b;
}

CertificateFile payload_to_file(const std::string& kind, const json& j)
{
    const std::string ptr = "/payload";
    if (kind == "poly") {
        expect_object(j, ptr, {"coefficients"});
        return get_zpoly(j["coefficients"], child(ptr, "coefficients"));
    }
    if (kind == "basis") {
        expect_object(j, ptr, {"d", "matrix"});
        return BasisInput{get_int(j["d"], child(ptr, "d")), get_zmatrix(j["matrix"], child(ptr, "matrix"))};
    }
    if (kind == "pratt")
        return get_proof(j, ptr);
    if (kind == "rabin")
        return get_rabin(j, ptr);
    if (kind == "degree_analysis")
        return get_degree_analysis(j, ptr);
    if (kind == "lpfw")
        return get_lpfw(j, ptr);
    if (kind == "dedekind")
        return get_dedekind(j, ptr);
    if (kind == "pmax_short") {
        expect_object(j, ptr, {"order", "certificate"});
        return PMaxShortFile{get_order(j["order"], child(ptr, "order")),
                             get_short(j["certificate"], child(ptr, "certificate"))};
    }
    if (kind == "pmax_long") {
        expect_object(j, ptr, {"order", "certificate"});
        return PMaxLongFile{get_order(j["order"], child(ptr, "order")),
                            get_long(j["certificate"], child(ptr, "certificate"))};
    }
    if (kind == "bundle")
        return get_bundle(j, ptr);
    fail("/kind", "unknown certificate kind '" + kind + "'");
}

json parse_json(std::string_view bytes)
{
    try {
        return json::parse(bytes.begin(), bytes.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " + e.what(), e.byte);
    }
}

const std::set<std::string>& input_kinds()
{
    static const std::set<std::string> kinds = {"poly", "basis"};
    return kinds;
}

struct Envelope {
    std::string kind;
    json payload;
};

Envelope open_envelope(std::string_view bytes)
{
    json env = parse_json(bytes);
    if (!env.is_object())
        fail("", "expected an object");
    if (!env.contains("schema_version") || !env["schema_version"].is_string())
        fail("/schema_version", "missing schema version");
    if (env["schema_version"] != std::string(kSchemaVersion))
        fail("/schema_version", "unsupported schema version '" + env["schema_version"].get<std::string>() + "'");
    if (!env.contains("kind") || !env["kind"].is_string())
        fail("/kind", "missing kind");
    const std::string kind = env["kind"];
    const bool is_input = input_kinds().count(kind) > 0;
    if (is_input && !env.contains("integrity"))
        expect_object(env, "", {"schema_version", "kind", "payload"});
    else
        expect_object(env, "", {"schema_version", "kind", "payload", "integrity"});
    if (env.contains("integrity")) {
        if (!env["integrity"].is_string())
            fail("/integrity", "integrity must be a string");
        if (env["integrity"] != "sha256:" + sha256_hex(env["payload"].dump()))
            fail("/integrity", "payload digest mismatch");
    }
    return {kind, std::move(env["payload"])};
}

}  // namespace

// ---------------------------------------------------------------------------

std::string kind_name(const CertificateFile& f)
{
    static const std::array<const char*, 10> names = {"poly",     "basis",      "pratt",     "rabin",
                                                      "degree_analysis", "lpfw", "dedekind", "pmax_short",
                                                      "pmax_long", "bundle"};
    return names[f.index()];
}

std::string serialize(const CertificateFile& f) { return seal(kind_name(f), payload_of(f)); }

CertificateFile parse(std::string_view bytes)
{
    Envelope env = open_envelope(bytes);
    return payload_to_file(env.kind, env.payload);
}

std::string sha256_hex(std::string_view bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 15]);
    }
    return out;
}

Verdict verify_certificate(const CertificateFile& file, unsigned threads)
{
    struct V {
        unsigned threads;
        Verdict operator()(const ZPoly&) const { throw std::invalid_argument("a polynomial is not a certificate"); }
        Verdict operator()(const BasisInput&) const { throw std::invalid_argument("a basis is not a certificate"); }
        Verdict operator()(const PrimalityProof& p) const { return verify_primality(p).under("pratt"); }
        Verdict operator()(const RabinCertificate& c) const { return verify_rabin(c, threads); }
        Verdict operator()(const DegreeAnalysisCertificate& c) const
        {
            return verify_degree_analysis_irreducible(c, threads);
        }
        Verdict operator()(const LPFWCertificate& c) const { return verify_lpfw(c, threads); }
        Verdict operator()(const DedekindCertificate& c) const { return verify_dedekind(c); }
        Verdict operator()(const PMaxShortFile& f) const
        {
            if (Verdict v = verify_order_builder(f.order, threads); !v)
                return v;
            return verify_pmax_short(f.order, times_table_of(f.order), f.cert, threads);
        }
        Verdict operator()(const PMaxLongFile& f) const
        {
            if (Verdict v = verify_order_builder(f.order, threads); !v)
                return v;
            return verify_pmax_long(f.order, times_table_of(f.order), f.cert, threads);
        }
        Verdict operator()(const CertificateBundle& b) const { return verify_bundle(b, threads); }
    };
    return std::visit(V{threads}, file);
}

VerifyOutcome verify_bytes(std::string_view bytes, unsigned threads)
{
    VerifyOutcome out;
    CertificateFile file;
    try {
        file = parse(bytes);
    } catch (const ParseError& e) {
        out.status = VerifyOutcome::Status::Malformed;
        out.reason = std::string("parse/") + e.what();
        return out;
    }
    out.kind = kind_name(file);
    if (input_kinds().count(out.kind)) {
        out.status = VerifyOutcome::Status::Malformed;
        out.reason = "input/" + out.kind + " files are generator inputs, not certificates";
        return out;
    }
    try {
        Verdict v = verify_certificate(file, threads);
        out.status = v.accepted ? VerifyOutcome::Status::Accepted : VerifyOutcome::Status::Rejected;
        out.reason = v.reason;
    } catch (const std::exception& e) {
        // Arithmetic on adversarial data (e.g. a singular basis) ends in rejection.
        out.status = VerifyOutcome::Status::Rejected;
        out.reason = std::string("exception/") + e.what();
    }
    return out;
}

std::string verdict_json(const VerifyOutcome& o)
{
    const char* status = o.status == VerifyOutcome::Status::Accepted   ? "accepted"
                         : o.status == VerifyOutcome::Status::Rejected ? "rejected"
                                                                       : "malformed";
    json j = {{"schema_version", std::string(kVerdictSchemaVersion)},
              {"status", status},
              {"accepted", o.status == VerifyOutcome::Status::Accepted},
              {"kind", o.kind},
              {"reason", o.reason}};
    return j.dump();
}

namespace {

const std::set<std::string>& skipped_keys()
{
    static const std::set<std::string> keys = {"t",    "nu",   "omega", "eta",  "eta2",
                                               "witness", "type", "block", "schema_version", "kind"};
    return keys;
}

void collect_leaves(const json& j, const std::string& ptr, std::vector<std::string>& out)
{
    if (j.is_object()) {
        for (const auto& item : j.items())
            if (!skipped_keys().count(item.key()))
                collect_leaves(item.value(), child(ptr, item.key()), out);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            collect_leaves(j[i], child(ptr, i), out);
    } else if (j.is_string()) {
        out.push_back(ptr);
    }
}

std::vector<std::string> nearby_values(const std::string& text)
{
    std::vector<std::string> out;
    Rat x;
    try {
        x = parse_rat(text);
    } catch (const std::exception&) {
        return out;
    }
    for (const Rat& y : {Rat(x + 1), Rat(x - 1), Rat(x + 2), Rat(2 * x + 5)}) {
        std::string s = to_string(y);
        if (s != text && std::find(out.begin(), out.end(), s) == out.end())
            out.push_back(s);
    }
    return out;
}

}  // namespace

std::vector<Mutation> single_field_mutations(std::string_view bytes, std::size_t limit)
{
    Envelope env = open_envelope(bytes);
    std::vector<std::string> leaves;
    collect_leaves(env.payload, "", leaves);

    std::vector<std::pair<std::string, std::string>> plan;  // (pointer, value)
    std::vector<std::string> befores;
    for (const std::string& ptr : leaves) {
        const std::string before = env.payload.at(json::json_pointer(ptr)).get<std::string>();
        for (std::string& v : nearby_values(before)) {
            plan.emplace_back(ptr, std::move(v));
            befores.push_back(before);
        }
    }
    std::vector<std::size_t> chosen;
    if (limit == 0 || plan.size() <= limit) {
        for (std::size_t i = 0; i < plan.size(); ++i)
            chosen.push_back(i);
    } else {
        for (std::size_t k = 0; k < limit; ++k)
            chosen.push_back(k * plan.size() / limit);
    }

    std::vector<Mutation> out;
    for (std::size_t i : chosen) {
        json payload = env.payload;
        payload[json::json_pointer(plan[i].first)] = plan[i].second;
        out.push_back({"/payload" + plan[i].first, befores[i], plan[i].second, seal(env.kind, payload)});
    }
    return out;
}

std::string fixture_dir(const std::string& fallback)
{
    if (const char* env = std::getenv("RINGCERT_FIXTURES"); env && *env)
        return env;
    return fallback;
}

}  // namespace ringcert
