// JSON encodings shared by the command-line front end. Exact numbers only:
// rationals and parameter scalars are strings, integers are JSON numbers
// when they fit in 64 bits and strings otherwise.
#ifndef HYPERLOC_JSON_IO_HPP
#define HYPERLOC_JSON_IO_HPP

#include <json.hpp>

#include <hyperloc/cherednik.hpp>
#include <hyperloc/comparability.hpp>
#include <hyperloc/git_fan.hpp>
#include <hyperloc/weyl.hpp>

namespace hyperloc::json_io
{

using Json = nlohmann::json;

Json to_json(const Integer &z);
Json to_json(const Rational &q);
Json to_json(const ParamScalar &x);
Json to_json(const IntVector &v);
Json to_json(const RatVector &v);
Json to_json(const ParamVector &v);
Json to_json(const IntMatrix &m);
Json to_json(const RatMatrix &m);

Integer integer_from(const Json &j);
Rational rational_from(const Json &j);
IntMatrix matrix_from(const Json &j);

Json covector_json(const Covector &c);
Json qset_json(const QSet &q);
Json walls_json(const WallArrangement &w);
Json chamber_json(const ChamberResult &c);
Json stability_json(const StabilityResult &r);
Json shift_cone_json(const ShiftCone &sc);
Json maximality_json(const MaximalityResult &r);

Json weyl_json(const WeylElement &a);
WeylElement weyl_from(const Json &j);
// Evaluates an expression tree of star/commutator/poisson/add/sub/scale/
// symbol/mu nodes over term lists.
WeylElement eval_weyl(const Json &expr);

Json flatness_json(const MomentIdeal &mi);
Json localization_json(const LocalizationReport &r);

} // namespace hyperloc::json_io

#endif
