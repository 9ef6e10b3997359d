// Copyright 2026 The uxrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "uxrank/core/criteria.hpp"

namespace uxrank {
namespace {

Criterion make(const char* id, EvalMethod method, const char* title,
               const char* body) {
  return Criterion{id, method, title, std::string(title) + ": " + body};
}

std::vector<Criterion> nielsen_catalog() {
  constexpr auto M = EvalMethod::NielsenHeuristics;
  return {
      make("nielsen-01", M, "Visibility of system status",
           "The design should always keep users informed about what is going "
           "on, through appropriate feedback within a reasonable amount of "
           "time."),
      make("nielsen-02", M, "Match between system and the real world",
           "The design should speak the users' language. Use words, phrases, "
           "and concepts familiar to the user, rather than internal jargon. "
           "Follow real-world conventions, making information appear in a "
           "natural and logical order."),
      make("nielsen-03", M, "User control and freedom",
           "Users often perform actions by mistake. They need a clearly "
           "marked emergency exit to leave the unwanted action without having "
           "to go through an extended process."),
      make("nielsen-04", M, "Consistency and standards",
           "Users should not have to wonder whether different words, "
           "situations, or actions mean the same thing. Follow platform and "
           "industry conventions."),
      make("nielsen-05", M, "Error prevention",
           "Good error messages are important, but the best designs carefully "
           "prevent problems from occurring in the first place. Either "
           "eliminate error-prone conditions, or check for them and present "
           "users with a confirmation option before they commit to the "
           "action."),
      make("nielsen-06", M, "Recognition rather than recall",
           "Minimize the user's memory load by making elements, actions, and "
           "options visible. The user should not have to remember information "
           "from one part of the interface to another. Information required "
           "to use the design (e.g. field labels or menu items) should be "
           "visible or easily retrievable when needed."),
      make("nielsen-07", M, "Flexibility and efficiency of use",
           "Shortcuts, hidden from novice users, may speed up the interaction "
           "for the expert user so that the design can cater to both "
           "inexperienced and experienced users. Allow users to tailor "
           "frequent actions."),
      make("nielsen-08", M, "Aesthetic and minimalist design",
           "Interfaces should not contain information that is irrelevant or "
           "rarely needed. Every extra unit of information in an interface "
           "competes with the relevant units of information and diminishes "
           "their relative visibility."),
      make("nielsen-09", M,
           "Help users recognize, diagnose, and recover from errors",
           "Error messages should be expressed in plain language (no error "
           "codes), precisely indicate the problem, and constructively "
           "suggest a solution."),
      make("nielsen-10", M, "Help and documentation",
           "It's best if the system doesn't need any additional explanation. "
           "However, it may be necessary to provide documentation to help "
           "users understand how to complete their tasks."),
  };
}

std::vector<Criterion> walkthrough_catalog() {
  constexpr auto M = EvalMethod::CognitiveWalkthrough;
  return {
      make("cw-01", M, "Will the user try to achieve the right effect?",
           "Does the user understand that this step is needed to reach their "
           "larger goal?"),
      make("cw-02", M,
           "Will the user notice that the correct action is available?",
           "Is the interactive element that achieves this step visible or "
           "easily findable?"),
      make("cw-03", M,
           "Will the user associate the correct action with the effect they "
           "are trying to achieve?",
           "Is it clear that this interactive element is the right one for "
           "the step?"),
      make("cw-04", M,
           "If the correct action is performed, will the user see that "
           "progress is being made toward their goal?",
           "Is there system feedback showing that the action was successful?"),
  };
}

}  // namespace

const std::vector<Criterion>& builtin_criteria(EvalMethod method) {
  static const std::vector<Criterion> nielsen = nielsen_catalog();
  static const std::vector<Criterion> walkthrough = walkthrough_catalog();
  return method == EvalMethod::NielsenHeuristics ? nielsen : walkthrough;
}

}  // namespace uxrank
