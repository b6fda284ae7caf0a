#pragma once

#include <iosfwd>
#include <string>

#include "cgknot/casson_gordon.hpp"
#include "cgknot/knot.hpp"
#include "cgknot/laurent.hpp"
#include "cgknot/witt.hpp"

namespace cgknot {

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& name);
Format default_format(); // CGKNOT_FORMAT, else text

// Every emitter writes one complete, newline-terminated report. JSON reports
// share the envelope {"schema": "cgknot.<verb>/1", "version", "input", ...}
// with a stable field order (docs/certificates.md).
void emit_alex(std::ostream& out, Format f, const std::string& input, const KnotExpr& e,
               const CycLaurent& delta);
void emit_jumps(std::ostream& out, Format f, const std::string& input,
                const JumpFunction& j);
void emit_sig_at(std::ostream& out, Format f, const std::string& input, const UnitAngle& w,
                 const mpq_class& sig);
void emit_disc_expr(std::ostream& out, Format f, const std::string& input,
                    const CanonicalDisc& d);
void emit_disc_char(std::ostream& out, Format f, const std::string& input, long p, long a,
                    const std::string& mode, const CanonicalDisc& d);
void emit_twisted(std::ostream& out, Format f, const std::string& input, long p, long d,
                  const TwistedAlex& ta);
void emit_deficiency(std::ostream& out, Format f, const std::string& input,
                     const DeficiencyResult& r);
void emit_independence(std::ostream& out, Format f, const std::string& input,
                       const IndependenceResult& r);
void emit_obstruction(std::ostream& out, Format f, const std::string& input,
                      const FamilySpec& fam, const ObstructionCertificate& c);

} // namespace cgknot
