#include "qqr/fixtures.hpp"

namespace qqr::fixtures {

std::pair<mpz_class, mpz_class> p113_pair() {
    return {mpz_class("10375431209297308"), mpz_class("10375431209297309")};
}

const std::map<int, std::pair<mpz_class, mpz_class>>& p127_rows() {
    static const std::map<int, std::pair<mpz_class, mpz_class>> rows = {
        {51, {mpz_class("223367511592873280"), mpz_class("223367511592873284")}},
        {52, {mpz_class("326460209251122496"), mpz_class("326460209251122492")}},
        {55, {mpz_class("840260234424082176"), mpz_class("840260234424082220")}},
        {56, {mpz_class("1080334587116677120"), mpz_class("1080334587116677140")}},
        {59, {mpz_class("1899366974583683328"), mpz_class("1899366974583683220")}},
        {60, {mpz_class("2152615904528174336"), mpz_class("2152615904528174316")}},
        {63, {mpz_class("2596788489999036416"), mpz_class("2596788489999036307")}},
    };
    return rows;
}

}  // namespace qqr::fixtures
