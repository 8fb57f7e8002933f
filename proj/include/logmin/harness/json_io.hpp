#pragma once

#include "logmin/category/descent.hpp"
#include "logmin/models/models.hpp"

#include "json.hpp"

#include <filesystem>

namespace logmin::harness {

using json = nlohmann::json;
using monoid::FgAbelianGroup;
using monoid::FgMonoid;
using monoid::GroupElement;
using monoid::MonoidHom;

// Integers fitting in 64 bits are written as numbers, larger ones as decimal strings.
json to_json(const monoid::Integer& x);
json to_json(const monoid::Vec& v);
json to_json(const GroupElement& g);
json to_json(const FgAbelianGroup& g);
json to_json(const FgMonoid& m);
json to_json(const MonoidHom& h);
json to_json(const category::FiniteCategory& c);
json functor_maps(const category::Functor& f);
json to_json(const category::Tower& t);
json to_json(const category::LogCfg& l);
json to_json(const models::FiniteLogSch& l);

// Parsers throw MalformedFixture naming the JSON location. Category values may be file paths,
// resolved against base_dir.
class Reader {
public:
    explicit Reader(std::filesystem::path base_dir = ".") : base_(std::move(base_dir)) {}

    monoid::Integer integer(const json& j, const std::string& at) const;
    monoid::Vec vec(const json& j, const std::string& at) const;
    FgAbelianGroup group(const json& j, const std::string& at) const;
    GroupElement element(const json& j, const FgAbelianGroup& g, const std::string& at) const;
    FgMonoid monoid(const json& j, const std::string& at) const;
    MonoidHom hom(const json& j, const std::string& at) const;
    category::CatPtr category(const json& j, const std::string& at) const;
    category::Functor functor(const json& j, category::CatPtr source, category::CatPtr target,
                              const std::string& at) const;
    category::Tower tower(const json& j, const std::string& at) const;
    category::LogCfg logcfg(const json& j, const std::string& at) const;
    models::CurveFiberDatum curve_fiber(const json& j, const std::string& at) const;
    models::CharLogPointDatum point(const json& j, const std::string& at) const;

private:
    const json& field(const json& j, const char* key, const std::string& at) const;
    std::filesystem::path base_;
};

json read_json_file(const std::filesystem::path& p);

// arrows of a curve structure as JSON
json to_json(const models::CurveStructure& s);

}  // namespace logmin::harness
