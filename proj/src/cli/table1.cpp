#include "hall/cli/table1.hpp"

#include <array>

namespace hall::cli {

using hall::to_string;

namespace {

constexpr std::array<KnownExample, 50> kExamples{{
    {1, "2", "1.42", "", ""},
    {2, "5234", "4.26", "217", "3"},
    {3, "8158", "3.76", "271", "3"},
    {4, "93844", "1.03", "919", "3"},
    {5, "367806", "2.93", "1213", "2"},
    {6, "421351", "1.05", "5193", "8"},
    {7, "720114", "3.77", "4243", "5"},
    {8, "939787", "3.16", "6786", "7"},
    {9, "28187351", "4.87", "90256", "17"},
    {10, "110781386", "1.23", "115778", "11"},
    {11, "154319269", "1.08", "211183", "17"},
    {12, "384242766", "1.34", "176419", "9"},
    {13, "390620082", "1.33", "177877", "9"},
    {14, "3790689201", "2.20", "430980", "7"},
    {15, "65589428378", "2.19", "768313", "3"},
    {16, "952764389446", "1.15", "79063817", "81"},
    {17, "12438517260105", "1.27", "507863263", "144"},
    {18, "35495694227489", "1.15", "1030703950", "173"},
    {19, "53197086958290", "1.66", "437617999", "60"},
    {20, "5853886516781223", "46.60", "6426898417", "84"},
    {21, "12813608766102806", "1.30", "17319173410", "153"},
    {22, "23415546067124892", "1.46", "68094518942", "445"},
    {23, "38115991067861271", "6.50", "108354409918", "555"},
    {24, "322001299796379844", "1.04", "387001980055", "682"},
    {25, "471477085999389882", "1.38", "83083668769", "121"},
    {26, "810574762403977064", "4.66", "359227383073", "399"},
    {27, "9870884617163518770", "1.90", "4524186815567", "1440"},
    {28, "42532374580189966073", "3.47", "8386886845023", "1286"},
    {29, "44648329463517920535", "1.79", "4603857036361", "689"},
    {30, "51698891432429706382", "1.75", "9318491574937", "1296"},
    {31, "231411667627225650649", "3.71", "14649368819024", "963"},
    {32, "601724682280310364065", "1.88", "39714194816596", "1619"},
    {33, "4996798823245299750533", "2.17", "250164969159375", "3539"},
    {34, "5592930378182848874404", "1.38", "32531865160357", "435"},
    {35, "14038790674256691230847", "1.27", "392068197831386", "3309"},
    {36, "77148032713960680268604", "10.18", "633004435512983", "2279"},
    {37, "180179004295105849668818", "5.65", "678311009850201", "1598"},
    {38, "372193377967238474960883", "1.33", "539307656512279", "884"},
    {39, "664947779818324205678136", "16.53", "3652370552518775", "4479"},
    {40, "2028871373185892500636155", "1.14", "11181418791644809", "7850"},
    {41, "10747835083471081268825856", "1.35", "42884607802081920", "13081"},
    {42, "37223900078734215181946587", "1.87", "46777434586297319", "7667"},
    {43, "69586951610485633367491417", "1.22", "72198966044283893", "8655"},
    {44, "3690445383173227306376634720", "1.51", "121619570207840431", "2002"},
    {45, "162921297743817207342396140787", "10.65", "20237053244197156774", "50137"},
    {46, "1114592308630995805123571151844", "1.04", "95524640670266092418", "90481"},
    {47, "39739590925054773507790363346813", "3.75", "211515916260522809737", "33553"},
    {48, "862611143810724763613366116643858", "1.10", "930889835660831460142", "31695"},
    {49, "1062521751024771376590062279975859", "1.01", "1095269810850785984986", "33601"},
    {50, "6078673043126084065007902175846955", "1.03", "20224028423712303104623", "259396"},
}};

}  // namespace

std::span<const KnownExample> known_examples() { return kExamples; }

std::vector<Natural> known_x_values() {
  std::vector<Natural> out;
  out.reserve(kExamples.size());
  for (const auto& e : kExamples) out.push_back(parse_natural(e.x));
  return out;
}

const KnownExample* find_known(const Natural& x) {
  const std::string text = to_string(x);
  for (const auto& e : kExamples) {
    if (e.x == text) return &e;
  }
  return nullptr;
}

}  // namespace hall::cli
