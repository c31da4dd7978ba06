#include "tables.hpp"

#include "errors.hpp"

namespace altperm {

std::vector<std::string> TableRow::patterns() const {
    std::vector<std::string> out;
    for (const auto& g : groups) out.insert(out.end(), g.begin(), g.end());
    return out;
}

std::string TableRow::label() const {
    std::string out;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (i) out += ", ";
        if (groups[i].size() == 1) {
            out += groups[i][0];
        } else {
            out += "(";
            for (std::size_t j = 0; j < groups[i].size(); ++j) {
                if (j) out += ", ";
                out += groups[i][j];
            }
            out += ")";
        }
    }
    return out;
}

const std::vector<ExpectedTable>& reference_tables() {
    static const std::vector<ExpectedTable> tables = [] {
        std::vector<ExpectedTable> t;
        const ClassSpec alt = ClassSpec::alternating(Alternation::UpDown);
        const ClassSpec des3 = ClassSpec::descent_set(3);

        t.push_back(ExpectedTable{
            1,
            "A_n(p) for odd n, p of length 4",
            alt,
            {1, 3, 5, 7, 9, 11},
            {
                {{{"1234", "4321"}, {"2134", "4312"}, {"3214", "4123"}}, {1, 2, 16, 168, 2112, 30030}},
                {{{"2143", "3412"}, {"1243", "3421"}, {"1432", "2341"}}, {1, 2, 12, 110, 1274, 17136}},
                {{{"2314", "4132"}, {"2413", "3142"}, {"1423", "3241"}}, {1, 2, 12, 106, 1138, 13734}},
                {{{"1324", "4231"}}, {1, 2, 12, 110, 1285, 17653}},
                {{{"1342", "2431"}}, {1, 2, 12, 108, 1202, 15234}},
                {{{"3124", "4213"}}, {1, 2, 16, 168, 2072, 28298}},
            }});

        t.push_back(ExpectedTable{
            2,
            "A_n(p) for even n, p of length 4",
            alt,
            {2, 4, 6, 8, 10, 12},
            {
                {{{"1234"}, {"1243", "2134"}, {"1432", "3214"}, {"2143"}, {"2341", "4123"}, {"3421", "4312"}},
                 {1, 5, 42, 462, 6006, 87516}},
                {{{"3142"}, {"3241", "4132"}}, {1, 5, 42, 444, 5337, 69657}},
                {{{"1423", "2314"}, {"2413"}}, {1, 4, 28, 260, 2844, 34564}},
                {{{"3412"}}, {1, 4, 29, 290, 3532, 49100}},
                {{{"1324"}}, {1, 4, 29, 292, 3620, 51866}},
                {{{"1342", "3124"}}, {1, 5, 42, 453, 5651, 77498}},
                {{{"2431", "4213"}}, {1, 5, 42, 454, 5680, 78129}},
                {{{"4231"}}, {1, 5, 42, 462, 6070, 90686}},
                {{{"4321"}}, {1, 5, 61, 744, 10329, 157586}},
            }});

        t.push_back(ExpectedTable{
            3,
            "A_n(p) for odd n, selected p of length 5",
            alt,
            {1, 3, 5, 7, 9, 11},
            {
                {{{"12534", "43521"}, {"21534", "43512"}}, {1, 2, 16, 243, 5291, 144430}},
                {{{"12453", "35421"}, {"21453", "35412"}}, {1, 2, 16, 243, 5307, 146013}},
                {{{"12354", "45321"},
                  {"12543", "34521"},
                  {"15432", "23451"},
                  {"21354", "45312"},
                  {"21543", "34512"},
                  {"32154", "45123"}},
                 {1, 2, 16, 243, 5330, 148575}},
                {{{"12435", "53421"}, {"21435", "53412"}}, {1, 2, 16, 243, 5330, 148764}},
                {{{"12345", "54321"}, {"21345", "54312"}, {"32145", "54123"}, {"43215", "51234"}},
                 {1, 2, 16, 272, 6531, 194062}},
            }});

        t.push_back(ExpectedTable{
            4,
            "A_n(p) for even n, selected p of length 5",
            alt,
            {2, 4, 6, 8, 10, 12},
            {
                {{{"12534", "23145"}, {"21534", "23154"}}, {1, 5, 56, 997, 23653, 679810}},
                {{{"34512", "45123"}, {"45312"}}, {1, 5, 56, 1004, 24310, 724379}},
                {{{"12435", "13245"}, {"13254", "21435"}}, {1, 5, 56, 1004, 24336, 727807}},
                {{{"12453", "31245"}, {"21453", "31254"}}, {1, 5, 61, 1194, 30802, 953088}},
                {{{"12345"},
                  {"21354"},
                  {"12354", "21345"},
                  {"12543", "32145"},
                  {"15432", "43215"},
                  {"21543", "32154"},
                  {"23451", "51234"},
                  {"34521", "54123"},
                  {"45321", "54312"}},
                 {1, 5, 61, 1194, 30945, 970717}},
            }});

        t.push_back(ExpectedTable{
            5,
            "Des_{n,3}(p) for n divisible by 3, selected p of length 4 and 5",
            des3,
            {3, 6, 9, 12},
            {
                {{{"2413"}, {"1423", "2314"}}, {1, 9, 153, 3465}},
                {{{"1243", "2134"}, {"2341", "4123"}}, {1, 9, 153, 3579}},
                {{{"3142"}, {"3241", "4132"}}, {1, 19, 642, 27453}},
                {{{"2143"}, {"4231"}, {"1432", "3214"}, {"3421", "4312"}}, {1, 19, 642, 29777}},
                {{{"12354", "21345"}, {"23451", "51234"}}, {1, 19, 887, 66816}},
                {{{"15243", "32415"}, {"35241", "52413"}}, {1, 19, 1077, 102051}},
                {{{"12543", "32145"}, {"34521", "54123"}}, {1, 19, 1134, 114621}},
                {{{"21354"}, {"52341"}}, {1, 19, 1134, 115515}},
                {{{"15432", "43215"},
                  {"21543", "32154"},
                  {"25431", "53214"},
                  {"31542", "42153"},
                  {"32541", "52143"},
                  {"35421", "54213"},
                  {"41532", "43152"},
                  {"42531", "53142"},
                  {"43251", "51432"},
                  {"43521", "54132"},
                  {"45321", "54312"},
                  {"52431", "53241"},
                  {"53421", "54231"}},
                 {1, 19, 1513, 211425}},
            }});

        return t;
    }();
    return tables;
}

const ExpectedTable& reference_table(int id) {
    const auto& all = reference_tables();
    if (id < 1 || id > static_cast<int>(all.size()))
        throw UsageError("table id must be 1.." + std::to_string(all.size()));
    return all[static_cast<std::size_t>(id) - 1];
}

}  // namespace altperm
