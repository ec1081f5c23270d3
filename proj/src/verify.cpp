#include "braidrep/verify.hpp"

namespace braidrep {

RelationReport check_relations(const RepSpec& spec, std::size_t n) {
    if (!spec.evaluable()) throw NotEvaluable("raw spec is not evaluable");
    if (n < 3 || n > 6) throw InvalidParams("relation check supports 3 <= n <= 6");
    RelationReport report;
    report.n = n;
    report.spec = spec;

    std::vector<PolyMatrix> gen;
    gen.reserve(n - 1);
    for (std::size_t i = 1; i <= n - 1; ++i) gen.push_back(generator_image(spec, i, 1, n));

    for (std::size_t i = 1; i <= n - 2; ++i) {
        PolyMatrix lhs = gen[i - 1] * gen[i] * gen[i - 1];
        PolyMatrix rhs = gen[i] * gen[i - 1] * gen[i];
        if (!(lhs == rhs)) report.cubic_failures.push_back(i);
    }
    for (std::size_t i = 1; i <= n - 1; ++i)
        for (std::size_t j = i + 2; j <= n - 1; ++j) {
            if (!(gen[i - 1] * gen[j - 1] == gen[j - 1] * gen[i - 1]))
                report.commuting_failures.emplace_back(i, j);
        }
    report.passed = report.cubic_failures.empty() && report.commuting_failures.empty();
    return report;
}

KernelWitness verify_kernel_witness(const RepSpec& spec, const BraidWord& w) {
    KernelWitness witness;
    witness.word = w;
    witness.spec = spec;
    witness.image_is_identity = evaluate(spec, w).is_identity();
    RepSpec burau = make_spec(RepKind::UnreducedBurau);
    witness.burau_image_nontrivial = !evaluate(burau, w).is_identity();
    witness.certified = witness.image_is_identity && witness.burau_image_nontrivial;
    return witness;
}

}  // namespace braidrep
