#include "qres/errors.hpp"
#include "qres/pipeline.hpp"

#include "CLI11.hpp"

#include <iostream>

namespace {

qres::WeightStrategy parse_weights(const std::string& script) {
    // "p,q;p,q;..." consumed in blow-up order; "classical" forces (1,1)
    if (script.empty()) return qres::WeightStrategy::auto_newton();
    if (script == "classical") return qres::WeightStrategy::classical();
    std::vector<std::pair<long, long>> entries;
    std::size_t pos = 0;
    while (pos < script.size()) {
        std::size_t next = script.find(';', pos);
        std::string part = script.substr(pos, next == std::string::npos ? next : next - pos);
        auto comma = part.find(',');
        if (comma == std::string::npos)
            throw CLI::ValidationError("--weights", "expected 'p,q;p,q;...'");
        entries.push_back({std::stol(part.substr(0, comma)), std::stol(part.substr(comma + 1))});
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return qres::WeightStrategy::from_script(entries);
}

std::array<qres::Rat, 3> parse_point(std::string text) {
    for (char strip : {'[', ']'}) text.erase(std::remove(text.begin(), text.end(), strip), text.end());
    std::array<qres::Rat, 3> p;
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t next = text.find(':', pos);
        std::string part = text.substr(pos, next == std::string::npos ? next : next - pos);
        if (part.empty()) throw CLI::ValidationError("--sing", "expected 'x:y:z'");
        auto slash = part.find('/');
        if (slash == std::string::npos)
            p[i] = qres::Rat(qres::Int(part));
        else
            p[i] = qres::Rat(qres::Int(part.substr(0, slash)), qres::Int(part.substr(slash + 1)));
        if (next == std::string::npos && i < 2)
            throw CLI::ValidationError("--sing", "expected 'x:y:z'");
        pos = next + 1;
    }
    return p;
}

void emit(const qres::ResultDocument& doc, bool json, bool dot, bool factored, bool expanded) {
    if (json) {
        std::cout << doc.to_json() << "\n";
        return;
    }
    if (dot) {
        for (auto& p : doc.points) {
            std::cout << "// " << p.label << " exceptional dual graph\n" << p.dot_plus;
            std::cout << "// " << p.label << " total transform\n" << p.dot_total;
        }
        if (!doc.surface_dot.empty()) std::cout << "// surface divisors\n" << doc.surface_dot;
        return;
    }
    if (factored) {
        std::cout << doc.factored() << "\n";
        return;
    }
    if (expanded) {
        std::cout << doc.expanded() << "\n";
        return;
    }
    std::cout << doc.text_summary();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"embedded Q-resolutions of plane-curve germs and Yomdin-Le surface "
                 "singularities, with A'Campo characteristic polynomials"};
    app.require_subcommand(1);

    std::string poly_text, weights_text;
    bool flag_json = false, flag_dot = false, flag_factored = false, flag_expanded = false;
    bool flag_verify = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--weights", weights_text,
                        "explicit blow-up weights 'p,q;p,q;...' or 'classical'");
        cmd->add_flag("--verify", flag_verify, "run the oracle and chart-level verification battery");
        cmd->add_flag("--json", flag_json, "emit the full result document as JSON");
        cmd->add_flag("--dot", flag_dot, "emit the dual graphs in DOT format");
        cmd->add_flag("--factored", flag_factored, "print the factored characteristic polynomial");
        cmd->add_flag("--expanded", flag_expanded, "print the expanded coefficient list");
    };

    CLI::App* curve = app.add_subcommand("curve", "resolve a plane-curve germ h(x,y)");
    curve->add_option("poly", poly_text, "germ, e.g. \"x^3 + y^2\"")->required();
    add_common(curve);

    CLI::App* surface = app.add_subcommand("surface", "resolve a surface germ f(x,y,z)");
    surface->add_option("poly", poly_text, "series, e.g. \"y^2*z - x^3 + z^4\"");
    std::vector<std::string> sing_texts, germ_texts, mu_texts;
    long opt_m = 0, opt_k = 1;
    surface->add_option("--sing", sing_texts, "singular points of the cone as x:y:z")
        ->take_all();
    surface->add_option("--germ", germ_texts, "local germ of the tangent cone (repeatable)")
        ->take_all();
    surface->add_option("--mu", mu_texts, "declared Milnor numbers matching --germ")->take_all();
    surface->add_option("-m,--multiplicity", opt_m, "cone degree m (with --germ)");
    surface->add_option("-k,--gap", opt_k, "gap k to the next homogeneous part (with --germ)");
    add_common(surface);

    CLI11_PARSE(app, argc, argv);

    try {
        qres::JobConfig job;
        job.weights = parse_weights(weights_text);
        job.verify = flag_verify;
        if (app.got_subcommand(curve)) {
            job.mode = qres::JobConfig::Mode::Curve;
            job.input = qres::WPoly::parse(poly_text);
        } else {
            job.mode = qres::JobConfig::Mode::Surface;
            if (!poly_text.empty()) job.input = qres::WPoly::parse(poly_text);
            for (auto& s : sing_texts) job.sing_hints.push_back(parse_point(s));
            for (std::size_t i = 0; i < germ_texts.size(); ++i) {
                qres::JobConfig::GermEntry g;
                g.germ = qres::WPoly::parse(germ_texts[i]);
                g.label = "germ " + std::to_string(i + 1);
                if (i < mu_texts.size()) g.mu = qres::Int(mu_texts[i]);
                job.germs.push_back(std::move(g));
            }
            job.m = opt_m;
            job.k = opt_k;
        }
        qres::ResultDocument doc = qres::run(job);
        emit(doc, flag_json, flag_dot, flag_factored, flag_expanded);
        return 0;
    } catch (const qres::ScopeError& e) {
        std::cerr << "scope error: " << e.what() << "\n";
        return 2;
    } catch (const qres::VerificationError& e) {
        std::cerr << "verification mismatch: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
