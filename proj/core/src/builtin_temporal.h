// Copyright 2026 The semtopic Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef SEMTOPIC_SRC_BUILTIN_TEMPORAL_H_
#define SEMTOPIC_SRC_BUILTIN_TEMPORAL_H_

#include <array>
#include <string_view>

namespace semtopic::internal {

enum class TemporalNs { kTopico, kTime, kGreg };

struct BuiltinTemporal {
  TemporalNs ns;
  std::string_view local;
  TemporalNs class_ns;
  std::string_view class_local;
  std::array<std::string_view, 4> spots;  // unused slots are empty
};

// 42 rules: relative expressions, parts of the day and calendar-relative
// spans (topico), weekdays (time), months (greg) and seasons (topico).
inline constexpr BuiltinTemporal kBuiltinTemporal[] = {
    {TemporalNs::kTopico, "Today", TemporalNs::kTopico, "TemporalExpression", {"today", "tdy", "2day"}},
    {TemporalNs::kTopico, "Tonight", TemporalNs::kTopico, "TemporalExpression", {"tonight", "tonite", "2nite"}},
    {TemporalNs::kTopico, "Now", TemporalNs::kTopico, "TemporalExpression", {"now", "right now"}},
    {TemporalNs::kTopico, "Tomorrow", TemporalNs::kTopico, "TemporalExpression", {"tomorrow", "tmrw", "tmr", "2morrow"}},
    {TemporalNs::kTopico, "Yesterday", TemporalNs::kTopico, "TemporalExpression", {"yesterday", "ystrdy", "yday"}},
    {TemporalNs::kTopico, "LastNight", TemporalNs::kTopico, "TemporalExpression", {"last night", "lastnight"}},
    {TemporalNs::kTopico, "Weekend", TemporalNs::kTopico, "TemporalExpression", {"weekend", "this weekend"}},
    {TemporalNs::kTopico, "Morning", TemporalNs::kTopico, "TemporalExpression", {"morning", "this morning"}},
    {TemporalNs::kTopico, "Afternoon", TemporalNs::kTopico, "TemporalExpression", {"afternoon", "this afternoon"}},
    {TemporalNs::kTopico, "Evening", TemporalNs::kTopico, "TemporalExpression", {"evening", "this evening"}},
    {TemporalNs::kTopico, "Midnight", TemporalNs::kTopico, "TemporalExpression", {"midnight"}},
    {TemporalNs::kTopico, "Noon", TemporalNs::kTopico, "TemporalExpression", {"noon", "midday"}},
    {TemporalNs::kTopico, "ThisWeek", TemporalNs::kTopico, "TemporalExpression", {"this week"}},
    {TemporalNs::kTopico, "NextWeek", TemporalNs::kTopico, "TemporalExpression", {"next week"}},
    {TemporalNs::kTopico, "LastWeek", TemporalNs::kTopico, "TemporalExpression", {"last week"}},
    {TemporalNs::kTopico, "ThisMonth", TemporalNs::kTopico, "TemporalExpression", {"this month"}},
    {TemporalNs::kTopico, "ThisYear", TemporalNs::kTopico, "TemporalExpression", {"this year"}},
    {TemporalNs::kTopico, "NextYear", TemporalNs::kTopico, "TemporalExpression", {"next year"}},
    {TemporalNs::kTopico, "LastYear", TemporalNs::kTopico, "TemporalExpression", {"last year"}},
    {TemporalNs::kTime, "Monday", TemporalNs::kTime, "DayOfWeek", {"monday"}},
    {TemporalNs::kTime, "Tuesday", TemporalNs::kTime, "DayOfWeek", {"tuesday"}},
    {TemporalNs::kTime, "Wednesday", TemporalNs::kTime, "DayOfWeek", {"wednesday"}},
    {TemporalNs::kTime, "Thursday", TemporalNs::kTime, "DayOfWeek", {"thursday"}},
    {TemporalNs::kTime, "Friday", TemporalNs::kTime, "DayOfWeek", {"friday"}},
    {TemporalNs::kTime, "Saturday", TemporalNs::kTime, "DayOfWeek", {"saturday"}},
    {TemporalNs::kTime, "Sunday", TemporalNs::kTime, "DayOfWeek", {"sunday"}},
    {TemporalNs::kGreg, "January", TemporalNs::kTime, "MonthOfYear", {"january", "jan"}},
    {TemporalNs::kGreg, "February", TemporalNs::kTime, "MonthOfYear", {"february", "feb"}},
    {TemporalNs::kGreg, "March", TemporalNs::kTime, "MonthOfYear", {"march"}},
    {TemporalNs::kGreg, "April", TemporalNs::kTime, "MonthOfYear", {"april", "apr"}},
    {TemporalNs::kGreg, "May", TemporalNs::kTime, "MonthOfYear", {"may"}},
    {TemporalNs::kGreg, "June", TemporalNs::kTime, "MonthOfYear", {"june"}},
    {TemporalNs::kGreg, "July", TemporalNs::kTime, "MonthOfYear", {"july"}},
    {TemporalNs::kGreg, "August", TemporalNs::kTime, "MonthOfYear", {"august", "aug"}},
    {TemporalNs::kGreg, "September", TemporalNs::kTime, "MonthOfYear", {"september", "sept", "sep"}},
    {TemporalNs::kGreg, "October", TemporalNs::kTime, "MonthOfYear", {"october", "oct"}},
    {TemporalNs::kGreg, "November", TemporalNs::kTime, "MonthOfYear", {"november", "nov"}},
    {TemporalNs::kGreg, "December", TemporalNs::kTime, "MonthOfYear", {"december", "dec"}},
    {TemporalNs::kTopico, "Spring", TemporalNs::kTopico, "Season", {"spring"}},
    {TemporalNs::kTopico, "Summer", TemporalNs::kTopico, "Season", {"summer"}},
    {TemporalNs::kTopico, "Fall", TemporalNs::kTopico, "Season", {"fall", "autumn"}},
    {TemporalNs::kTopico, "Winter", TemporalNs::kTopico, "Season", {"winter"}},
};

}  // namespace semtopic::internal

#endif  // SEMTOPIC_SRC_BUILTIN_TEMPORAL_H_
